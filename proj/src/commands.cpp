#include "braid3/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "braid3/conjugacy.hpp"
#include "braid3/json_io.hpp"
#include "braid3/word_problem.hpp"

namespace braid3 {

namespace {

nlohmann::json parse_error_json(const ParseError& e, const char* which) {
    return {{"error", e.what()}, {"position", e.position()}, {"input", which}};
}

std::string strip_line(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Deterministic per-(seed, length, trial) stream selector.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t length, int trial) {
    return splitmix64(splitmix64(seed ^ (0x51ed2701u + static_cast<std::uint64_t>(length))) +
                      static_cast<std::uint64_t>(trial));
}

std::size_t max_entry_bits(const UniMat& m) {
    std::size_t bits = 0;
    for (const mpz_class* z : {&m.a(), &m.b(), &m.c(), &m.d()})
        if (*z != 0) bits = std::max(bits, mpz_sizeinbase(z->get_mpz_t(), 2));
    return bits;
}

}  // namespace

int status_exit_code(Status s) {
    switch (s) {
        case Status::Equal:
        case Status::Conjugate:
        case Status::Ok:
            return 0;
        case Status::NotEqual:
        case Status::NotConjugate:
            return 1;
        case Status::Error:
        default:
            return 2;
    }
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Equal: return "equal";
        case Status::NotEqual: return "not-equal";
        case Status::Conjugate: return "conjugate";
        case Status::NotConjugate: return "not-conjugate";
        case Status::Ok: return "ok";
        case Status::Error:
        default: return "error";
    }
}

CommandResult cmd_eq(const std::string& w1, const std::string& w2) {
    BraidWord u, v;
    try {
        u = parse_word(w1);
    } catch (const ParseError& e) {
        return CommandResult{Status::Error, parse_error_json(e, "left")};
    }
    try {
        v = parse_word(w2);
    } catch (const ParseError& e) {
        return CommandResult{Status::Error, parse_error_json(e, "right")};
    }
    RhoInvariant ru = rho(u), rv = rho(v);
    return CommandResult{ru == rv ? Status::Equal : Status::NotEqual,
                         {{"left", rho_json(ru)}, {"right", rho_json(rv)}}};
}

CommandResult cmd_conj(const std::string& w1, const std::string& w2) {
    BraidWord u, v;
    try {
        u = parse_word(w1);
    } catch (const ParseError& e) {
        return CommandResult{Status::Error, parse_error_json(e, "left")};
    }
    try {
        v = parse_word(w2);
    } catch (const ParseError& e) {
        return CommandResult{Status::Error, parse_error_json(e, "right")};
    }
    MuInvariant mu_u = mu(u), mu_v = mu(v);
    nlohmann::json payload = {{"left", mu_json(mu_u)}, {"right", mu_json(mu_v)}};
    if (mu_u.cls == mu_v.cls) {
        if (auto k = central_twist(u, v)) payload["central_twist"] = mpz_json(*k);
    }
    return CommandResult{mu_u == mu_v ? Status::Conjugate : Status::NotConjugate,
                         std::move(payload)};
}

CommandResult cmd_invariants(const std::string& w) {
    BraidWord word;
    try {
        word = parse_word(w);
    } catch (const ParseError& e) {
        return CommandResult{Status::Error, parse_error_json(e, "word")};
    }
    RhoInvariant r = rho(word);
    nlohmann::json payload = rho_json(r);
    payload["class"] = class_json(lambda_invariant(phi(word)));
    payload["normal_form"] = render_normal_form(normal_form(word));
    return CommandResult{Status::Ok, std::move(payload)};
}

CommandResult cmd_nf(const std::string& w) {
    BraidWord word;
    try {
        word = parse_word(w);
    } catch (const ParseError& e) {
        return CommandResult{Status::Error, parse_error_json(e, "word")};
    }
    NormalForm nf = normal_form(word);
    nlohmann::json tail = nlohmann::json::array();
    for (const TailPair& p : nf.tail) tail.push_back({mpz_json(p.a), mpz_json(p.b)});
    return CommandResult{Status::Ok,
                         {{"normal_form", render_normal_form(nf)},
                          {"k", mpz_json(nf.k)},
                          {"tail", std::move(tail)}}};
}

CommandResult cmd_gen(std::size_t length, std::uint64_t seed) {
    BraidWord w = random_word(length, seed);
    return CommandResult{Status::Ok,
                         {{"word", render_word(w)}, {"length", length}, {"seed", seed}}};
}

std::vector<CommandResult> cmd_batch(std::istream& in, BatchOp op) {
    std::vector<CommandResult> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string word = strip_line(line);
        if (word.empty()) continue;
        CommandResult r;
        switch (op) {
            case BatchOp::EqSelf:
                r = cmd_eq(word, word);
                break;
            case BatchOp::Invariants:
                r = cmd_invariants(word);
                break;
            case BatchOp::Mu:
            default:
                try {
                    r = CommandResult{Status::Ok, mu_json(mu(parse_word(word)))};
                } catch (const ParseError& e) {
                    r = CommandResult{Status::Error, parse_error_json(e, "word")};
                }
                break;
        }
        r.payload["line"] = line_no;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CommandResult> cmd_batch_file(const std::string& path, BatchOp op) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return cmd_batch(in, op);
}

const char* bench_op_name(BenchOp op) {
    switch (op) {
        case BenchOp::Rho: return "rho";
        case BenchOp::Mu: return "mu";
        case BenchOp::Nf:
        default: return "nf";
    }
}

nlohmann::json bench_record_json(const BenchRecord& r) {
    return {{"op", bench_op_name(r.op)},   {"length", r.length},
            {"trials", r.trials},          {"seed", r.seed},
            {"elapsed_ns", r.elapsed_ns},  {"bit_size", r.bit_size}};
}

BenchReport run_bench(BenchOp op, const std::vector<std::size_t>& lengths, int trials,
                      std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("run_bench: trials must be >= 1");
    BenchReport report;
    for (std::size_t length : lengths) {
        std::vector<std::int64_t> times;
        times.reserve(static_cast<std::size_t>(trials));
        std::size_t bits = 0;
        for (int t = 0; t < trials; ++t) {
            BraidWord w = random_word(length, trial_seed(seed, length, t));
            auto t0 = std::chrono::steady_clock::now();
            switch (op) {
                case BenchOp::Rho: (void)rho(w); break;
                case BenchOp::Mu: (void)mu(w); break;
                case BenchOp::Nf:
                default: (void)normal_form(w); break;
            }
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
            bits = std::max(bits, max_entry_bits(phi(w).rep()));
        }
        std::sort(times.begin(), times.end());
        report.records.push_back(BenchRecord{op, length, trials, seed,
                                             times[times.size() / 2], bits});
    }
    // Least-squares fit of log elapsed against log length.
    const std::size_t n = report.records.size();
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const BenchRecord& r : report.records) {
            double x = std::log(static_cast<double>(r.length));
            double y = std::log(std::max<double>(1.0, static_cast<double>(r.elapsed_ns)));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double dn = static_cast<double>(n);
        report.slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    } else {
        report.slope = 0.0;
    }
    return report;
}

}  // namespace braid3
