#pragma once

#include "ck/selftest.hpp"

#include <chrono>
#include <cstdint>
#include <mutex>
#include <random>
#include <string>

namespace ck::detail {

constexpr std::size_t kKeptFailures = 8;

// thread-safe sink for case counts and failures of one criterion
class Collector {
public:
    explicit Collector(CriterionReport& r) : r_(r) {}
    void count(std::size_t n = 1) {
        std::lock_guard<std::mutex> lock(m_);
        r_.cases += n;
    }
    void fail(std::string where, std::string lhs = {}, std::string rhs = {}) {
        std::lock_guard<std::mutex> lock(m_);
        ++r_.failure_count;
        if (r_.failures.size() < kKeptFailures) r_.failures.push_back({std::move(where), std::move(lhs), std::move(rhs)});
    }
    // records a failure unless ok; returns ok
    bool expect(bool ok, const std::string& where, const std::string& lhs = {}, const std::string& rhs = {}) {
        if (!ok) fail(where, lhs, rhs);
        return ok;
    }
    void note(std::string s) {
        std::lock_guard<std::mutex> lock(m_);
        r_.notes.push_back(std::move(s));
    }

private:
    CriterionReport& r_;
    std::mutex m_;
};

// independent stream per (criterion, case) so results do not depend on scheduling
inline std::mt19937_64 case_rng(std::uint64_t seed, int criterion, std::uint64_t index) {
    std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(s);
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void criterion_cartan_weyl_orthogonal(CriterionReport& r, const SelftestOptions& opt);
void criterion_cartan_weyl_unitary_symplectic(CriterionReport& r, const SelftestOptions& opt);
void criterion_decompositions(CriterionReport& r, const SelftestOptions& opt);
void criterion_ordered_contraction(CriterionReport& r, const SelftestOptions& opt);
void criterion_category_axioms(CriterionReport& r, const SelftestOptions& opt);
void criterion_isotropic(CriterionReport& r, const SelftestOptions& opt);
void criterion_spin(CriterionReport& r, const SelftestOptions& opt);
void criterion_berezin(CriterionReport& r, const SelftestOptions& opt);
void criterion_ordered_category(CriterionReport& r, const SelftestOptions& opt);
void criterion_worked_matrices(CriterionReport& r, const SelftestOptions& opt);

}  // namespace ck::detail
