#include "lightstore/core.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lightstore {

namespace {

struct Key {
    const char* name;
    std::function<double&(SimulationConfig&)> real;
    std::function<int&(SimulationConfig&)> integer;
};

const std::vector<Key>& keys()
{
    using C = SimulationConfig;
    static const std::vector<Key> table = {
        {"scheme.E_a", [](C& c) -> double& { return c.scheme.E_a; }, {}},
        {"scheme.E_b", [](C& c) -> double& { return c.scheme.E_b; }, {}},
        {"scheme.E_c", [](C& c) -> double& { return c.scheme.E_c; }, {}},
        {"scheme.E_d", [](C& c) -> double& { return c.scheme.E_d; }, {}},
        {"scheme.d1", [](C& c) -> double& { return c.scheme.d1; }, {}},
        {"scheme.d2", [](C& c) -> double& { return c.scheme.d2; }, {}},
        {"scheme.d3", [](C& c) -> double& { return c.scheme.d3; }, {}},
        {"scheme.d4", [](C& c) -> double& { return c.scheme.d4; }, {}},
        {"scheme.U", [](C& c) -> double& { return c.scheme.U; }, {}},
        {"scheme.Gamma_ab", [](C& c) -> double& { return c.scheme.Gamma_ab; }, {}},
        {"scheme.Gamma_ac", [](C& c) -> double& { return c.scheme.Gamma_ac; }, {}},
        {"scheme.Gamma_ad", [](C& c) -> double& { return c.scheme.Gamma_ad; }, {}},
        {"schedule.signal.eps10", [](C& c) -> double& { return c.schedule.signal.eps10; }, {}},
        {"schedule.signal.tau1", [](C& c) -> double& { return c.schedule.signal.tau1; }, {}},
        {"schedule.signal.tau2", [](C& c) -> double& { return c.schedule.signal.tau2; }, {}},
        {"schedule.signal.channel", {}, [](C& c) -> int& { return c.schedule.signal.channel; }},
        {"schedule.control2.eps2_max", [](C& c) -> double& { return c.schedule.control2.eps2_max; }, {}},
        {"schedule.control2.t_off", [](C& c) -> double& { return c.schedule.control2.t_off; }, {}},
        {"schedule.control2.t_on", [](C& c) -> double& { return c.schedule.control2.t_on; }, {}},
        {"schedule.control2.rise", [](C& c) -> double& { return c.schedule.control2.rise; }, {}},
        {"schedule.control4.amp", [](C& c) -> double& { return c.schedule.control4.amp; }, {}},
        {"schedule.control4.t1", [](C& c) -> double& { return c.schedule.control4.t1; }, {}},
        {"schedule.control4.t2", [](C& c) -> double& { return c.schedule.control4.t2; }, {}},
        {"L", [](C& c) -> double& { return c.L; }, {}},
        {"N", [](C& c) -> double& { return c.N; }, {}},
        {"nz", {}, [](C& c) -> int& { return c.nz; }},
        {"dt", [](C& c) -> double& { return c.dt; }, {}},
        {"t_end", [](C& c) -> double& { return c.t_end; }, {}},
        {"record_stride", {}, [](C& c) -> int& { return c.record_stride; }},
        {"prepared_theta", [](C& c) -> double& { return c.prepared_theta; }, {}},
        {"threads", {}, [](C& c) -> int& { return c.threads; }},
    };
    return table;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view value, std::string_view key, int line)
{
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw std::invalid_argument("config line " + std::to_string(line) + ": bad value '" +
                                    std::string(value) + "' for key '" + std::string(key) + "'");
    return out;
}

} // namespace

SimulationConfig parse_config(std::string_view text, SimulationConfig cfg)
{
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "scheme.variant") {
            cfg.scheme.variant = parse_variant(value);
            continue;
        }
        bool found = false;
        for (const auto& k : keys()) {
            if (key != k.name) continue;
            if (k.real)
                k.real(cfg) = parse_number<double>(value, key, line_no);
            else
                k.integer(cfg) = parse_number<int>(value, key, line_no);
            found = true;
            break;
        }
        if (!found)
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                        std::string(key) + "'");
    }
    return cfg;
}

SimulationConfig load_config(const std::string& path, SimulationConfig base)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::string format_config(const SimulationConfig& cfg)
{
    SimulationConfig copy = cfg;
    std::string out = "scheme.variant = " + std::string(to_string(cfg.scheme.variant)) + "\n";
    char buf[64];
    for (const auto& k : keys()) {
        if (k.real)
            std::snprintf(buf, sizeof buf, "%.17g", k.real(copy));
        else
            std::snprintf(buf, sizeof buf, "%d", k.integer(copy));
        out += k.name;
        out += " = ";
        out += buf;
        out += '\n';
    }
    return out;
}

} // namespace lightstore
