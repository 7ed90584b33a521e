#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace idemcore {

// Canonical JSON type for witnesses and reports: insertion order is preserved,
// which keeps emitted reports byte-stable.
using Json = nlohmann::ordered_json;

// Thrown when a description fails a law check at construction time.
// `code` is a stable machine-readable tag, `witness` carries the offending ids.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, std::string detail, Json witness = Json::object())
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          witness_(std::move(witness)) {}

    const std::string& code() const { return code_; }
    const Json& witness() const { return witness_; }

private:
    std::string code_;
    Json witness_;
};

// Thrown when an exhaustive operation would exceed its configured budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string op, std::string detail)
        : std::runtime_error("budget exceeded in " + op + ": " + detail), op_(std::move(op)) {}

    const std::string& op() const { return op_; }

private:
    std::string op_;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VecHash {
    std::size_t operator()(const std::vector<int32_t>& v) const {
        std::size_t h = v.size();
        for (int32_t x : v) hash_combine(h, static_cast<std::size_t>(static_cast<uint32_t>(x)));
        return h;
    }
};

// Parallelism degree: IDEMCORE_THREADS overrides, default 1 (sequential).
// All callers aggregate by index, so results do not depend on the degree.
inline unsigned parallel_degree() {
    if (const char* env = std::getenv("IDEMCORE_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    return 1;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned deg = parallel_degree();
    if (deg <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < deg; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace idemcore
