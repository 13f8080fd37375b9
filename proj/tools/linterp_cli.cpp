// Command-line front end: code generation, encode/corrupt/decode round
// trips, iteration tracing, and the interpolation benchmark.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "linterp/io.hpp"

using namespace linterp;

namespace {

std::vector<FieldElement> parse_elements(const Field* f,
                                         const std::vector<std::string>& toks) {
    std::vector<FieldElement> out;
    for (const auto& t : toks) out.emplace_back(f, f->parse(t));
    return out;
}

void print_message(std::ostream& os, const std::vector<FieldElement>& u) {
    for (size_t i = 0; i < u.size(); ++i)
        os << (i ? " " : "") << u[i].field()->render(u[i].value());
    os << "\n";
}

void write_message(const std::string& path, const std::vector<FieldElement>& u) {
    if (!path.empty()) write_vector(path, u);
}

int cmd_gen(const std::string& kind, uint32_t q, uint32_t m,
            const std::string& modulus, int n, int k, int l, int L,
            uint64_t seed, const std::vector<std::string>& g,
            const std::string& out) {
    CodeDescriptor code = [&]() -> CodeDescriptor {
        if (kind == "gabidulin") {
            auto f = modulus.empty() ? Field::make(q, m)
                                     : Field::make(q, m, parse_modulus(modulus));
            if (g.empty()) return GabidulinCode(f, n, k);
            return GabidulinCode(f, n, k, parse_elements(f.get(), g));
        }
        if (kind == "kk") {
            auto f = modulus.empty() ? Field::make(q, m)
                                     : Field::make(q, m, parse_modulus(modulus));
            if (g.empty()) return KKCode(f, l, k);
            return KKCode(f, l, k, parse_elements(f.get(), g));
        }
        if (kind == "mv") return MVCode(q, static_cast<int>(m), l, k, L, seed);
        throw std::invalid_argument("unknown code kind: " + kind);
    }();
    write_code(out, code);
    return 0;
}

int cmd_encode(const CodeDescriptor& code, const std::string& in,
               const std::string& out) {
    if (const auto* gab = std::get_if<GabidulinCode>(&code)) {
        write_vector(out, gab->encode(read_vector(in, gab->field())));
    } else if (const auto* kk = std::get_if<KKCode>(&code)) {
        write_subspace(out, kk->encode(read_vector(in, kk->field())));
    } else {
        const auto& mv = std::get<MVCode>(code);
        write_subspace(out, mv.encode(read_digits(in)));
    }
    return 0;
}

int cmd_corrupt(const CodeDescriptor& code, const std::string& in,
                const std::string& out, int t, int rho, uint64_t seed) {
    if (const auto* gab = std::get_if<GabidulinCode>(&code)) {
        auto x = read_vector(in, gab->field());
        auto e = random_rank_t_error(*gab->field(), x.size(), t, seed);
        for (size_t i = 0; i < x.size(); ++i) x[i] = x[i] + e[i];
        write_vector(out, x);
    } else if (const auto* kk = std::get_if<KKCode>(&code)) {
        auto v = read_subspace(in, kk->field()->q());
        write_subspace(out, kk_channel(*kk, v, rho, t, seed));
    } else {
        const auto& mv = std::get<MVCode>(code);
        auto v = read_subspace(in, mv.q());
        write_subspace(out, mv_channel(mv, v, t, seed));
    }
    return 0;
}

// MV list decoding by exhaustive message search: the interpolation minimum is
// computed once, then each of the q^k candidate messages is tested against
// the composition identity. Fine at desk scale; prints every list member.
int mv_decode(const MVCode& mv, const std::string& in, const std::string& out) {
    auto u = read_subspace(in, mv.q());
    MVExtraction ex = mv_extract_points(mv, u);
    MVInterpResult res = mv_interpolate(mv, ex.functionals);
    if (res.minimum.is_zero() || !res.degree_bounds_ok) {
        std::cout << "FAIL degree_violation\n";
        return 1;
    }
    std::vector<std::vector<uint8_t>> list;
    std::vector<uint8_t> digits(mv.k(), 0);
    for (;;) {
        LinPoly msg = mv.message_poly(digits);
        LinPoly total = res.minimum.component(0);
        LinPoly comp = LinPoly::identity(mv.big_field());
        for (int j = 1; j <= mv.list_size(); ++j) {
            comp = msg.compose(comp);
            total = total + res.minimum.component(j).compose(comp);
        }
        if (total.is_zero()) list.push_back(digits);
        int pos = 0;
        while (pos < mv.k() && ++digits[pos] == mv.q()) digits[pos++] = 0;
        if (pos == mv.k()) break;
    }
    if (list.empty()) {
        std::cout << "FAIL empty_list\n";
        return 1;
    }
    std::ofstream os;
    if (!out.empty()) os.open(out);
    for (const auto& cand : list) {
        std::string line;
        for (size_t i = 0; i < cand.size(); ++i)
            line += (i ? " " : "") + std::to_string(cand[i]);
        std::cout << line << "\n";
        if (os.is_open()) os << line << "\n";
    }
    return 0;
}

int cmd_decode(const CodeDescriptor& code, const std::string& in,
               const std::string& out) {
    if (const auto* gab = std::get_if<GabidulinCode>(&code)) {
        auto res = gab_decode(*gab, read_vector(in, gab->field()));
        if (res.status != DecodeStatus::ok) {
            std::cout << "FAIL " << decode_status_name(res.status) << "\n";
            return 1;
        }
        print_message(std::cout, res.message);
        write_message(out, res.message);
        return 0;
    }
    if (const auto* kk = std::get_if<KKCode>(&code)) {
        auto res = kk_decode(*kk, read_subspace(in, kk->field()->q()));
        if (res.status != DecodeStatus::ok) {
            std::cout << "FAIL " << decode_status_name(res.status) << "\n";
            return 1;
        }
        print_message(std::cout, res.message);
        write_message(out, res.message);
        return 0;
    }
    return mv_decode(std::get<MVCode>(code), in, out);
}

int cmd_trace(const CodeDescriptor& code, const std::string& in,
              bool normalize) {
    const auto* gab = std::get_if<GabidulinCode>(&code);
    if (!gab) throw std::invalid_argument("trace expects a gabidulin code");
    const Field* f = gab->field();
    MonomialOrder ord = MonomialOrder::bivariate(gab->k());
    auto res = gab_decode(*gab, read_vector(in, f));
    const auto& trace = res.interp.trace;
    for (size_t i = 0; i < trace.size(); ++i) {
        std::cout << "i=" << i + 1 << "\n";
        for (size_t j = 0; j < trace[i].deltas.size(); ++j)
            std::cout << "  D" << j << " = "
                      << f->render(trace[i].deltas[j].value()) << "\n";
        for (size_t j = 0; j < trace[i].candidates.size(); ++j) {
            ModulePoly g = normalize ? trace[i].candidates[j].normalized(ord)
                                     : trace[i].candidates[j];
            std::cout << "  g" << j << " = " << g.str() << "\n";
        }
    }
    ModulePoly minimum =
        normalize ? res.interp.minimum.normalized(ord) : res.interp.minimum;
    std::cout << "minimum = " << minimum.str() << "\n";
    if (res.status == DecodeStatus::ok) {
        std::cout << "message =";
        for (const auto& x : res.message) std::cout << " " << f->render(x.value());
        std::cout << "\n";
    } else {
        std::cout << "decode: " << decode_status_name(res.status) << "\n";
    }
    return 0;
}

int cmd_bench(uint32_t q, int m, int l, int k, int L, uint64_t seed, int tmin,
              int tmax, int reps, const std::string& out) {
    using clock = std::chrono::steady_clock;
    MVCode code(q, m, l, k, L, seed);
    MonomialOrder ord = MonomialOrder::multivariate(L, k);
    std::vector<uint8_t> msg(k, 1);
    SubspaceBasis v = code.encode(msg);

    std::ofstream os;
    if (!out.empty()) os.open(out);
    std::ostream& sink = out.empty() ? std::cout : os;
    sink << "t,interp_ns,gaussian_ns,speedup\n";

    const int inner = 50;  // average over a burst to steady the clock reads
    for (int t = tmin; t <= tmax; ++t) {
        SubspaceBasis recv = mv_channel(code, v, t, seed + 1000 + t);
        MVExtraction ex = mv_extract_points(code, recv);

        // correctness gate before any timing is reported
        InterpResult it = interpolate(ex.functionals, ord, L, code.big_field());
        EliminationResult el =
            interpolate_by_elimination(ex.functionals, ord, L, code.big_field());
        if (it.minimum.normalized(ord) != el.minimum.normalized(ord))
            throw std::runtime_error("bench: the two routes disagree at t=" +
                                     std::to_string(t));

        auto median = [&](auto&& fn) {
            std::vector<double> samples;
            for (int r = 0; r < reps; ++r) {
                auto start = clock::now();
                for (int b = 0; b < inner; ++b) fn();
                auto stop = clock::now();
                samples.push_back(
                    std::chrono::duration<double, std::nano>(stop - start)
                        .count() /
                    inner);
            }
            std::sort(samples.begin(), samples.end());
            return samples[samples.size() / 2];
        };
        double interp_ns = median([&] {
            (void)interpolate(ex.functionals, ord, L, code.big_field());
        });
        double gaussian_ns = median([&] {
            (void)interpolate_by_elimination(ex.functionals, ord, L,
                                             code.big_field());
        });
        char line[160];
        std::snprintf(line, sizeof(line), "%d,%.0f,%.0f,%.3f\n", t, interp_ns,
                      gaussian_ns, gaussian_ns / interp_ns);
        sink << line;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interpolation-based rank/subspace code toolkit"};
    app.require_subcommand(1);

    // shared option storage
    std::string code_path, in_path, out_path, modulus, kind;
    std::vector<std::string> g_tokens;
    uint32_t q = 2;
    uint32_t m = 1;
    int n = 0, k = 1, l = 1, L = 1, t = 0, rho = 0;
    int tmin = 0, tmax = 0, reps = 9;
    uint64_t seed = 1;
    bool normalize = false;

    auto* gen = app.add_subcommand("gen", "write a code descriptor");
    gen->add_option("kind", kind, "gabidulin | kk | mv")->required();
    gen->add_option("--q", q);
    gen->add_option("--m", m);
    gen->add_option("--modulus", modulus, "c0,c1,...,cm over GF(q)");
    gen->add_option("--n", n);
    gen->add_option("--k", k);
    gen->add_option("--l", l);
    gen->add_option("--L", L);
    gen->add_option("--seed", seed);
    gen->add_option("--g", g_tokens, "evaluation points / alphas");
    gen->add_option("--out", out_path)->required();

    auto add_io = [&](CLI::App* cmd, bool needs_out) {
        cmd->add_option("--code", code_path)->required();
        cmd->add_option("--in", in_path)->required();
        auto* o = cmd->add_option("--out", out_path);
        if (needs_out) o->required();
    };
    auto* enc = app.add_subcommand("encode", "message file -> codeword file");
    add_io(enc, true);
    auto* cor = app.add_subcommand("corrupt", "apply the channel");
    add_io(cor, true);
    cor->add_option("--t", t);
    cor->add_option("--rho", rho);
    cor->add_option("--seed", seed);
    auto* dec = app.add_subcommand("decode", "received file -> message");
    add_io(dec, false);
    auto* tra = app.add_subcommand("trace", "print the iteration trace");
    tra->add_option("--code", code_path)->required();
    tra->add_option("--in", in_path)->required();
    tra->add_flag("--normalize", normalize);

    auto* ben = app.add_subcommand("bench", "interpolation vs elimination CSV");
    ben->add_option("--q", q);
    ben->add_option("--m", m);
    ben->add_option("--l", l);
    ben->add_option("--k", k);
    ben->add_option("--L", L);
    ben->add_option("--seed", seed);
    ben->add_option("--tmin", tmin);
    ben->add_option("--tmax", tmax)->required();
    ben->add_option("--reps", reps);
    ben->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return cmd_gen(kind, q, m, modulus, n, k, l, L, seed, g_tokens,
                           out_path);
        if (ben->parsed())
            return cmd_bench(q, static_cast<int>(m), l, k, L, seed, tmin, tmax,
                             reps, out_path);
        CodeDescriptor code = read_code(code_path);
        if (enc->parsed()) return cmd_encode(code, in_path, out_path);
        if (cor->parsed()) return cmd_corrupt(code, in_path, out_path, t, rho, seed);
        if (dec->parsed()) return cmd_decode(code, in_path, out_path);
        return cmd_trace(code, in_path, normalize);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
