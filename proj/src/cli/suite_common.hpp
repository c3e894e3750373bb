#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "homsob/config.hpp"
#include "homsob/errors.hpp"
#include "homsob/verify.hpp"

namespace homsob::suites {

/// Collects assertions; a library error inside a block fails that block's id.
class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    void le(const std::string& id, const std::string& what, double measured, double threshold) {
        push({id, what, measured, threshold, "<=", 0.0, measured <= threshold});
    }
    void ge(const std::string& id, const std::string& what, double measured, double threshold) {
        push({id, what, measured, threshold, ">=", 0.0, measured >= threshold});
    }
    void in(const std::string& id, const std::string& what, double measured, double lo, double hi) {
        push({id, what, measured, lo, "in", hi, measured >= lo && measured <= hi});
    }
    void truth(const std::string& id, const std::string& what, bool ok) {
        push({id, what, ok ? 1.0 : 0.0, 1.0, "==", 0.0, ok});
    }
    void info(const std::string& id, const std::string& what, double measured) {
        push({id, what, measured, 0.0, "info", 0.0, true});
    }

    template <class E>
    void throws(const std::string& id, const std::string& what, const std::function<void()>& fn) {
        bool thrown = false;
        try {
            fn();
        } catch (const E&) {
            thrown = true;
        } catch (const std::exception&) {
        }
        push({id, what, thrown ? 1.0 : 0.0, 1.0, "thrown", 0.0, thrown});
    }

    /// Runs a block of checks; an exception records a failure under `id`.
    void block(const std::string& id, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            push({id, std::string("unexpected error: ") + e.what(), std::nan(""), 0.0, "<=", 0.0, false});
        }
    }

    SuiteReport take() { return std::move(report_); }

private:
    void push(Assertion a) { report_.assertions.push_back(std::move(a)); }
    SuiteReport report_;
};

double rel_l2(const Field& a, const Field& b);
double max_diff(const Field& a, const Field& b);
/// max |a - b| / max |b|
double rel_sup(const Field& a, const Field& b);
/// Real sum of random cosines on grid-resonant wavevectors with |k_i| <= kmax, no DC.
Field random_field(const GridSpec& g, Rng& rng, int terms = 12, int kmax = 0);
/// max |a - b| over grid points with |x| <= radius.
double max_diff_within(const Field& a, const Field& b, double radius);
double max_abs_within(const Field& a, double radius);

SuiteReport multipliers_suite(const RunConfig& cfg);
SuiteReport littlewood_paley_suite(const RunConfig& cfg);
SuiteReport norms_suite(const RunConfig& cfg);
SuiteReport realization_suite(const RunConfig& cfg);
SuiteReport oracles_suite(const RunConfig& cfg);
SuiteReport embeddings_suite(const RunConfig& cfg);

}  // namespace homsob::suites
