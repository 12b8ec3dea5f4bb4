#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braid3/commands.hpp"

namespace {

using braid3::BatchOp;
using braid3::BenchOp;
using braid3::CommandResult;
using braid3::Status;

bool g_json = false;

std::string json_scalar(const nlohmann::json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string class_human(const nlohmann::json& c) {
    std::string type = c.at("type").get<std::string>();
    if (type == "elliptic3") return type + "(sign=" + c.at("sign").dump() + ")";
    if (type == "parabolic") return type + "(s=" + json_scalar(c.at("s")) + ")";
    if (type == "hyperbolic") {
        std::string out = type + "(trace=" + json_scalar(c.at("trace")) + ", period=[";
        bool first = true;
        for (const auto& e : c.at("period")) {
            if (!first) out += ",";
            out += json_scalar(e);
            first = false;
        }
        return out + "])";
    }
    return type;
}

void emit_json(const CommandResult& r) {
    nlohmann::json out = r.payload;
    out["status"] = braid3::status_name(r.status);
    std::cout << out.dump() << "\n";
}

int finish(const CommandResult& r) {
    if (g_json) {
        emit_json(r);
        return r.exit_code();
    }
    if (r.status == Status::Error) {
        std::cerr << "error: " << r.payload.value("error", "unknown error") << "\n";
        return r.exit_code();
    }
    switch (r.status) {
        case Status::Equal: std::cout << "equal\n"; break;
        case Status::NotEqual: std::cout << "not equal\n"; break;
        case Status::Conjugate:
            std::cout << "conjugate\n";
            if (r.payload.contains("central_twist"))
                std::cout << "central twist: " << json_scalar(r.payload["central_twist"]) << "\n";
            break;
        case Status::NotConjugate: std::cout << "not conjugate\n"; break;
        default: break;
    }
    return r.exit_code();
}

int finish_inv(const CommandResult& r) {
    if (g_json || r.status == Status::Error) return finish(r);
    std::cout << "rho1 = " << json_scalar(r.payload.at("rho1")) << "\n"
              << "rho2 = " << json_scalar(r.payload.at("rho2")) << "\n"
              << "eps  = " << json_scalar(r.payload.at("eps")) << "\n"
              << "class = " << class_human(r.payload.at("class")) << "\n"
              << "normal form = " << r.payload.at("normal_form").get<std::string>() << "\n";
    return r.exit_code();
}

int finish_line(const CommandResult& r, const std::string& key) {
    if (g_json || r.status == Status::Error) return finish(r);
    std::cout << r.payload.at(key).get<std::string>() << "\n";
    return r.exit_code();
}

int run_batch(const std::string& file, BatchOp op) {
    std::vector<CommandResult> results;
    try {
        if (file == "-")
            results = braid3::cmd_batch(std::cin, op);
        else
            results = braid3::cmd_batch_file(file, op);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    int code = 0;
    for (const CommandResult& r : results) {
        if (g_json) {
            emit_json(r);
        } else if (r.status == Status::Error) {
            std::cerr << "line " << r.payload.value("line", 0) << ": error: "
                      << r.payload.value("error", "unknown error") << "\n";
        } else {
            std::cout << "line " << r.payload.value("line", 0) << ": "
                      << braid3::status_name(r.status) << "\n";
        }
        if (r.status == Status::Error) code = 2;
    }
    return code;
}

int run_bench_cmd(const std::string& op_name, const std::vector<std::size_t>& lengths,
                  int trials, std::uint64_t seed) {
    BenchOp op = op_name == "mu" ? BenchOp::Mu : op_name == "nf" ? BenchOp::Nf : BenchOp::Rho;
    braid3::BenchReport report = braid3::run_bench(op, lengths, trials, seed);
    if (g_json) {
        nlohmann::json out{{"records", nlohmann::json::array()}, {"slope", report.slope}};
        for (const auto& rec : report.records) out["records"].push_back(braid3::bench_record_json(rec));
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& rec : report.records)
            std::printf("op=%s length=%zu trials=%d median_ns=%lld bits=%zu\n",
                        braid3::bench_op_name(rec.op), rec.length, rec.trials,
                        static_cast<long long>(rec.elapsed_ns), rec.bit_size);
        std::printf("slope = %.3f\n", report.slope);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"word and conjugacy decisions in the braid group B3"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "emit JSON instead of human-readable output");

    std::string w1, w2, word;
    auto* eq = app.add_subcommand("eq", "decide whether two words are equal in B3");
    eq->add_option("left", w1, "first word")->required();
    eq->add_option("right", w2, "second word")->required();

    auto* conj = app.add_subcommand("conj", "decide whether two words are conjugate in B3");
    conj->add_option("left", w1, "first word")->required();
    conj->add_option("right", w2, "second word")->required();

    auto* nf = app.add_subcommand("nf", "print the normal form of a word");
    nf->add_option("word", word, "input word")->required();

    auto* inv = app.add_subcommand("inv", "print invariants of a word");
    inv->add_option("word", word, "input word")->required();

    std::size_t gen_length = 0;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a pseudorandom word");
    gen->add_option("length", gen_length, "word length in letters")->required();
    gen->add_option("--seed", seed, "RNG seed");

    std::string batch_file = "-";
    std::string batch_op = "invariants";
    auto* batch = app.add_subcommand("batch", "process one word per line");
    batch->add_option("--file", batch_file, "input path, - for stdin");
    batch->add_option("--op", batch_op, "per-line operation")
        ->check(CLI::IsMember({"eq-self", "invariants", "mu"}));

    std::string bench_op = "rho";
    std::vector<std::size_t> bench_lengths{1000, 2000, 4000, 8000};
    int bench_trials = 5;
    auto* bench = app.add_subcommand("bench", "time invariant computation on random words");
    bench->add_option("--op", bench_op, "operation to time")
        ->check(CLI::IsMember({"rho", "mu", "nf"}));
    bench->add_option("--lengths", bench_lengths, "comma-separated word lengths")
        ->delimiter(',');
    bench->add_option("--trials", bench_trials, "trials per length")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eq->parsed()) return finish(braid3::cmd_eq(w1, w2));
        if (conj->parsed()) return finish(braid3::cmd_conj(w1, w2));
        if (nf->parsed()) return finish_line(braid3::cmd_nf(word), "normal_form");
        if (inv->parsed()) return finish_inv(braid3::cmd_invariants(word));
        if (gen->parsed()) return finish_line(braid3::cmd_gen(gen_length, seed), "word");
        if (batch->parsed()) {
            BatchOp op = batch_op == "eq-self" ? BatchOp::EqSelf
                       : batch_op == "mu"      ? BatchOp::Mu
                                               : BatchOp::Invariants;
            return run_batch(batch_file, op);
        }
        if (bench->parsed()) return run_bench_cmd(bench_op, bench_lengths, bench_trials, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
