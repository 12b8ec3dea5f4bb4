#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace braid3 {

// Command layer backing the braid3 executable. Each cmd_* function is pure
// apart from I/O passed in explicitly, so the CLI contract is testable
// without spawning processes.

enum class Status { Equal, NotEqual, Conjugate, NotConjugate, Ok, Error };

// Process exit codes: deciding commands use 0 for the positive answer and 1
// for the negative one; any usage, parse or I/O error is 2.
int status_exit_code(Status s);
const char* status_name(Status s);

struct CommandResult {
    Status status;
    nlohmann::json payload;

    int exit_code() const { return status_exit_code(status); }
};

CommandResult cmd_eq(const std::string& w1, const std::string& w2);
CommandResult cmd_conj(const std::string& w1, const std::string& w2);
CommandResult cmd_invariants(const std::string& w);
CommandResult cmd_nf(const std::string& w);
CommandResult cmd_gen(std::size_t length, std::uint64_t seed);

enum class BatchOp { EqSelf, Invariants, Mu };

// One word per line; '#' starts a comment, blank lines are skipped. A line
// that fails to parse yields an Error result and processing continues.
std::vector<CommandResult> cmd_batch(std::istream& in, BatchOp op);

// Throws std::runtime_error when the file cannot be opened.
std::vector<CommandResult> cmd_batch_file(const std::string& path, BatchOp op);

enum class BenchOp { Rho, Mu, Nf };

struct BenchRecord {
    BenchOp op;
    std::size_t length;
    int trials;
    std::uint64_t seed;
    std::int64_t elapsed_ns;  // median over trials
    std::size_t bit_size;     // max phi(w) entry bit length observed
};

struct BenchReport {
    std::vector<BenchRecord> records;
    double slope;  // least-squares slope of log elapsed vs log length
};

// Times op on random words of the given letter lengths. The word stream is
// a pure function of (seed, length, trial), so identical seeds reproduce
// identical inputs; timings of course vary.
BenchReport run_bench(BenchOp op, const std::vector<std::size_t>& lengths, int trials,
                      std::uint64_t seed);

nlohmann::json bench_record_json(const BenchRecord& r);
const char* bench_op_name(BenchOp op);

}  // namespace braid3
