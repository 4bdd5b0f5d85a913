#include "lightstore/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lightstore {

namespace {

void append(std::string& out, double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

std::string format_run_csv(const ScenarioResult& r)
{
    std::string out = kRunCsvHeader;
    out += '\n';
    for (std::size_t i = 0; i < r.times.size(); ++i) {
        append(out, r.times[i]);
        for (double v : {r.out1[i].real(), r.out1[i].imag(), r.out3[i].real(), r.out3[i].imag()}) {
            out += ',';
            append(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string format_summary_csv(std::span<const double> thetas, std::span<const ScenarioResult> results)
{
    if (thetas.size() != results.size()) throw std::invalid_argument("format_summary_csv: size mismatch");
    std::string out = kSummaryCsvHeader;
    out += '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        append(out, thetas[i]);
        for (double v : {r.peak_amp_1, r.peak_amp_3, r.released_energy_1, r.released_energy_3,
                         r.residual_coherence_norm}) {
            out += ',';
            append(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string run_file_name(std::size_t index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "run_%03zu.csv", index);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

} // namespace lightstore
