// Copyright 2026 The fractal-interior Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fractal-interior: exact certificates and pictures for the carpet-like set K.
//
// Exit codes: 0 verified success, 1 verified false / infeasible / over budget,
// 2 usage error.

#include "fractal/expansion.hpp"
#include "fractal/fibre.hpp"
#include "fractal/interior.hpp"
#include "fractal/measure.hpp"
#include "fractal/render.hpp"
#include "fractal/selftest.hpp"
#include "fractal/serialize.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace fractal;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& flag, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

OpenInterval interval_arg(const std::string& flag, const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw UsageError(flag + ": expected \"lo,hi\"");
    OpenInterval i{rational_arg(flag, text.substr(0, comma)), rational_arg(flag, text.substr(comma + 1))};
    if (i.empty()) throw UsageError(flag + ": empty interval");
    return i;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

struct Run {
    std::string subcommand;
    Json inputs = Json::object();
    Json outputs = Json::array();
    std::string report_path;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::string& path, const std::string& text)
    {
        write_text(path, text);
        outputs.push_back(path.empty() ? "-" : path);
    }

    int finish(int status) const
    {
        if (!report_path.empty()) {
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            write_text(report_path, dump(Json{{"subcommand", subcommand},
                                              {"inputs", inputs},
                                              {"outputs", outputs},
                                              {"exitStatus", status},
                                              {"elapsedMs", ms}}));
        }
        return status;
    }
};

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string mode = "cover";
    std::string variant = "standard";
    unsigned m = 1;
    std::string eps = "1";
    std::uint64_t samples = 0;
    unsigned depth = 24;
    std::uint64_t seed = 1;
    unsigned width = 512;
    unsigned height = 512;
    std::string viewport = "0,1,0,1";
    std::string out;
};

int cmd_render(const RenderArgs& a, Run& run)
{
    RenderConfig c;
    c.mode = a.mode == "cloud" ? RenderMode::Cloud : RenderMode::Cover;
    c.variant = a.variant == "self-affine" ? Variant::SelfAffine : Variant::Standard;
    c.m = a.m;
    c.epsilon = rational_arg("--eps", a.eps);
    if (c.epsilon.sign() <= 0 || c.epsilon > Rational(1)) throw UsageError("--eps must lie in (0, 1]");
    c.samples = a.samples;
    c.depth = a.depth;
    c.seed = a.seed;
    c.width = a.width;
    c.height = a.height;

    std::vector<Rational> v;
    std::size_t begin = 0;
    while (true) {
        const auto comma = a.viewport.find(',', begin);
        v.push_back(rational_arg("--viewport", a.viewport.substr(begin, comma - begin)));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (v.size() != 4) throw UsageError("--viewport: expected \"x0,x1,y0,y1\"");
    c.viewport = {v[0], v[1], v[2], v[3]};
    if (!(v[0] < v[1]) || !(v[2] < v[3])) throw UsageError("--viewport: empty rectangle");

    run.inputs = {{"mode", a.mode},       {"variant", a.variant}, {"m", a.m},
                  {"eps", to_json(c.epsilon)}, {"samples", a.samples}, {"depth", a.depth},
                  {"seed", a.seed},       {"width", a.width},     {"height", a.height},
                  {"viewport", a.viewport}};
    const Graymap g = render(c);
    run.emit(a.out, g.to_plain_pgm());
    std::cerr << "render: " << g.lit_count() << " of " << std::size_t{g.width()} * g.height() << " pixels lit\n";
    return kOk;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const std::string& x_text, std::size_t length, std::optional<std::uint64_t> cap, const std::string& out,
               Run& run)
{
    const Rational x = rational_arg("--x", x_text);
    run.inputs = {{"x", to_json(x)}, {"M", length}};
    if (cap) run.inputs["cap"] = *cap;
    if (x.sign() < 0 || x > expansion_bound()) {
        std::cerr << "expand: x = " << x << " lies outside [0, 1/56]\n";
        return kFalse;
    }
    if (cap && *cap < 56) throw UsageError("--cap must be at least 56");
    const auto e = greedy_base8(x, length, cap);
    const auto report = verify_expansion(e);
    Json j = to_json(e);
    j["verification"] = to_json(report);
    run.emit(out, dump(j));
    return report.ok ? kOk : kFalse;
}

// ---------------------------------------------------------------- fibre

int cmd_fibre(const std::string& x_text, const std::string& y_text, unsigned N, unsigned long windows,
              std::uint64_t cap, const std::string& out, Run& run)
{
    const Rational x = rational_arg("--x", x_text);
    const Rational y = rational_arg("--y", y_text);
    run.inputs = {{"x", to_json(x)}, {"y", to_json(y)}, {"N", N}, {"windows", windows}, {"cap", cap}};
    if (N == 0) throw UsageError("--N must be positive");
    if (cap != 0 && cap < 56) throw UsageError("--cap must be 0 or at least 56");
    if (windows == 0) throw UsageError("--windows must be positive");
    if (!y.is_dyadic() || y.sign() < 0 || y >= Rational(1)) {
        std::cerr << "fibre: y must be a dyadic rational in [0, 1)\n";
        return kUsage;
    }
    if (x.sign() < 0 || x > fibre_interval_end(N)) {
        std::cerr << "fibre: x = " << x << " lies outside I_" << N << " = [0, " << fibre_interval_end(N) << "]\n";
        return kFalse;
    }
    const auto membership = check_AN(binary_expand(y, 0), N);
    if (!membership.verdict) {
        std::cerr << "fibre: y = " << y << " is not in A_" << N << " (zero density fails at n = "
                  << membership.first_failure << ")\n";
        return kFalse;
    }
    const auto cert = certify_fibre_point(x, y, N, windows,
                                          cap == 0 ? std::nullopt : std::optional<std::uint64_t>(cap));
    const auto report = verify_fibre_certificate(cert);
    Json j = to_json(cert);
    j["verification"] = to_json(report);
    run.emit(out, dump(j));
    return cert.verified && report.ok ? kOk : kFalse;
}

// ---------------------------------------------------------------- gap

int cmd_gap(const std::string& a, const std::string& b, unsigned m, const std::string& min_width_text,
            const std::string& out, Run& run)
{
    const OpenInterval window{rational_arg("--a", a), rational_arg("--b", b)};
    if (window.empty()) throw UsageError("--a must be below --b");
    if (m == 0) throw UsageError("--m must be positive");
    const Rational min_width =
        min_width_text.empty() ? window.width() / Rational(64) : rational_arg("--min-width", min_width_text);
    run.inputs = {{"a", to_json(window.lo)}, {"b", to_json(window.hi)}, {"m", m}, {"minWidth", to_json(min_width)}};
    const auto gap = find_gap(window, m, min_width);
    const auto report = verify_gap(gap);
    Json j = to_json(gap);
    j["verification"] = to_json(report);
    run.emit(out, dump(j));
    return report.ok ? kOk : kFalse;
}

// ---------------------------------------------------------------- witness

std::string witness_transcript(const InteriorWitness& w, const WitnessReport& r)
{
    std::ostringstream s;
    const auto& g = w.gap;
    s << "Claim: the open rectangle (" << w.rectangle.x.lo << ", " << w.rectangle.x.hi << ") x (" << w.rectangle.y.lo
      << ", " << w.rectangle.y.hi << ") lies in I x J and misses K.\n";
    s << "1. J = (" << w.J.lo << ", " << w.J.hi << ") is the depth-" << w.word.size() << " dyadic strip with word ";
    for (auto bit : w.word) s << static_cast<int>(bit);
    s << ".\n   Every point of K with y in J lies in a depth-" << w.m
      << " triangle with apex (q, " << w.top() << ") and legs 2^-" << w.m << ", q in X_" << w.m << ".\n";
    s << "2. The digits below eps = " << g.epsilon << " move a depth-" << g.m << " digit sum by at most delta = "
      << g.delta << ".\n";
    s << "3. No truncated X_" << g.m << " element lies in (" << g.outer.lo << ", " << g.outer.hi
      << "), so no X_" << g.m << " element lies in (" << g.inner.lo << ", " << g.inner.hi << ").\n";
    s << "4. x = " << w.x << ", r = " << w.r << "; the rectangle is (x - r/3, x + r/3) x (top - r/3, top).\n";
    const Rational leg = Rational::pow2(-static_cast<long>(w.m));
    const auto ex = apex_exclusion_interval(w.rectangle, w.top(), leg);
    s << "5. A triangle meets the rectangle only if its apex q lies in (" << ex.lo << ", " << ex.hi
      << "), which is inside the gap.\n";
    s << "Exact checks: " << (r.checks.ok ? "passed" : "FAILED") << ".\n";
    for (const auto& f : r.checks.failures) s << "   failure: " << f << "\n";
    s << "Sampling: " << r.samples << " points of K with the strip's y-prefix, " << r.in_band
      << " in the rectangle's y-range, " << r.in_rectangle << " inside the rectangle.\n";
    return s.str();
}

int cmd_witness(const std::string& I_text, const std::string& J_text, std::uint64_t samples, std::uint64_t seed,
                const std::string& out, const std::string& transcript, Run& run)
{
    const OpenInterval I = interval_arg("--I", I_text);
    const OpenInterval J = interval_arg("--J", J_text);
    run.inputs = {{"I", to_json(I)}, {"J", to_json(J)}, {"samples", samples}, {"seed", seed}};
    if (I.lo.sign() < 0 || I.hi > Rational(1)) throw UsageError("--I must lie in [0, 1]");
    try {
        (void)strip_word(J);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--J: ") + e.what());
    }
    const auto w = witness_empty_interior(I, J);
    const auto report = verify_witness(w, samples, seed);
    Json j = to_json(w);
    j["verification"] = to_json(report.checks);
    j["sampling"] = Json{{"samples", report.samples}, {"inBand", report.in_band}, {"inRectangle", report.in_rectangle}};
    run.emit(out, dump(j));
    if (!transcript.empty()) run.emit(transcript, witness_transcript(w, report));
    return report.ok() ? kOk : kFalse;
}

// ---------------------------------------------------------------- measure

int cmd_measure(std::optional<unsigned long> N, unsigned long M, unsigned long spot, bool find_min,
                const std::string& out, Run& run)
{
    if (M == 0) throw UsageError("--M must be positive");
    run.inputs = {{"M", M}, {"spot", spot}, {"findMin", find_min}};
    if (find_min) {
        const auto best = minimal_positive_N(M);
        if (!best) {
            std::cerr << "measure: no N <= " << M << " gives a positive bound at M = " << M << "\n";
            return kFalse;
        }
        N = *best;
        std::cerr << "measure: smallest positive N at M = " << M << " is " << *N << "\n";
    }
    if (!N) throw UsageError("--N is required unless --find-min is given");
    if (*N == 0 || *N > M) throw UsageError("--N must satisfy 1 <= N <= M");
    run.inputs["N"] = *N;
    const auto cert = an_lower_bound(*N, M, spot);
    run.emit(out, dump(to_json(cert)));
    return cert.positive() ? kOk : kFalse;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest()
{
    const auto checks = run_selftest();
    const SelftestCheck* first_failure = nullptr;
    for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) std::cout << ": " << c.detail;
        std::cout << "\n";
        if (!c.passed && !first_failure) first_failure = &c;
    }
    if (first_failure) {
        std::cerr << "selftest: first failing property: " << first_failure->name << "\n";
        return kFalse;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact certificates and renderings for an infinitely generated self-similar set"};
    app.require_subcommand(1);
    Run run;

    auto* render_cmd = app.add_subcommand("render", "Render a cover or a point cloud as a plain PGM");
    RenderArgs ra;
    render_cmd->add_option("--mode", ra.mode, "cover or cloud")->check(CLI::IsMember({"cover", "cloud"}));
    render_cmd->add_option("--variant", ra.variant, "standard or self-affine")
        ->check(CLI::IsMember({"standard", "self-affine"}));
    render_cmd->add_option("--m", ra.m, "cover depth");
    render_cmd->add_option("--eps", ra.eps, "digit truncation threshold");
    render_cmd->add_option("--samples", ra.samples, "cloud sample count");
    render_cmd->add_option("--depth", ra.depth, "cloud sample depth");
    render_cmd->add_option("--seed", ra.seed, "cloud seed");
    render_cmd->add_option("--width", ra.width, "image width")->check(CLI::PositiveNumber);
    render_cmd->add_option("--height", ra.height, "image height")->check(CLI::PositiveNumber);
    render_cmd->add_option("--viewport", ra.viewport, "x0,x1,y0,y1");
    render_cmd->add_option("--out", ra.out, "output path (default stdout)");
    render_cmd->add_option("--report", run.report_path, "JSON run report path");

    auto* expand_cmd = app.add_subcommand("expand", "Greedy base-8 expansion of x in [0, 1/56]");
    std::string ex_x;
    std::size_t ex_len = 20;
    std::optional<std::uint64_t> ex_cap;
    std::string ex_out;
    expand_cmd->add_option("--x", ex_x)->required();
    expand_cmd->add_option("--M", ex_len, "number of digits");
    expand_cmd->add_option("--cap", ex_cap, "largest admissible denominator");
    expand_cmd->add_option("--out", ex_out);
    expand_cmd->add_option("--report", run.report_path);

    auto* fibre_cmd = app.add_subcommand("fibre", "Certify (x, y) in K for y in A_N and x in I_N");
    std::string fb_x, fb_y, fb_out;
    unsigned fb_N = 0;
    unsigned long fb_windows = 64;
    std::uint64_t fb_cap = kDefaultFibreDigitCap;
    fibre_cmd->add_option("--x", fb_x)->required();
    fibre_cmd->add_option("--y", fb_y)->required();
    fibre_cmd->add_option("--N", fb_N)->required();
    fibre_cmd->add_option("--windows", fb_windows, "window budget for infinite expansions");
    fibre_cmd->add_option("--cap", fb_cap, "largest digit denominator, 0 for the uncapped greedy");
    fibre_cmd->add_option("--out", fb_out);
    fibre_cmd->add_option("--report", run.report_path);

    auto* witness_cmd = app.add_subcommand("witness", "Rectangle inside I x J disjoint from K");
    std::string wi_I, wi_J, wi_out, wi_transcript;
    std::uint64_t wi_samples = 100000, wi_seed = 1;
    witness_cmd->add_option("--I", wi_I, "lo,hi")->required();
    witness_cmd->add_option("--J", wi_J, "dyadic strip lo,hi")->required();
    witness_cmd->add_option("--samples", wi_samples);
    witness_cmd->add_option("--seed", wi_seed);
    witness_cmd->add_option("--out", wi_out);
    witness_cmd->add_option("--transcript", wi_transcript, "human-readable proof path");
    witness_cmd->add_option("--report", run.report_path);

    auto* gap_cmd = app.add_subcommand("gap", "Certified gap of X_m inside (a, b)");
    std::string gp_a, gp_b, gp_min, gp_out;
    unsigned gp_m = 1;
    gap_cmd->add_option("--a", gp_a)->required();
    gap_cmd->add_option("--b", gp_b)->required();
    gap_cmd->add_option("--m", gp_m);
    gap_cmd->add_option("--min-width", gp_min, "default (b - a)/64");
    gap_cmd->add_option("--out", gp_out);
    gap_cmd->add_option("--report", run.report_path);

    auto* measure_cmd = app.add_subcommand("measure", "Exact lower bound on the area of K");
    std::optional<unsigned long> ms_N;
    unsigned long ms_M = 0, ms_spot = 500;
    bool ms_find = false;
    std::string ms_out;
    measure_cmd->add_option("--N", ms_N);
    measure_cmd->add_option("--M", ms_M)->required();
    measure_cmd->add_option("--spot", ms_spot, "tail domination spot-check length");
    measure_cmd->add_flag("--find-min", ms_find, "use the smallest N with a positive bound");
    measure_cmd->add_option("--out", ms_out);
    measure_cmd->add_option("--report", run.report_path);

    auto* selftest_cmd = app.add_subcommand("selftest", "Desk-scale oracle and invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (render_cmd->parsed()) {
            run.subcommand = "render";
            return run.finish(cmd_render(ra, run));
        }
        if (expand_cmd->parsed()) {
            run.subcommand = "expand";
            return run.finish(cmd_expand(ex_x, ex_len, ex_cap, ex_out, run));
        }
        if (fibre_cmd->parsed()) {
            run.subcommand = "fibre";
            return run.finish(cmd_fibre(fb_x, fb_y, fb_N, fb_windows, fb_cap, fb_out, run));
        }
        if (witness_cmd->parsed()) {
            run.subcommand = "witness";
            return run.finish(cmd_witness(wi_I, wi_J, wi_samples, wi_seed, wi_out, wi_transcript, run));
        }
        if (gap_cmd->parsed()) {
            run.subcommand = "gap";
            return run.finish(cmd_gap(gp_a, gp_b, gp_m, gp_min, gp_out, run));
        }
        if (measure_cmd->parsed()) {
            run.subcommand = "measure";
            return run.finish(cmd_measure(ms_N, ms_M, ms_spot, ms_find, ms_out, run));
        }
        if (selftest_cmd->parsed()) {
            run.subcommand = "selftest";
            return run.finish(cmd_selftest());
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return run.finish(kUsage);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return run.finish(kFalse);
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return run.finish(kFalse);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return run.finish(kUsage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return run.finish(kFalse);
    }
    return kUsage;
}
