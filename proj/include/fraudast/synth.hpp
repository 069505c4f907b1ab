#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "fraudast/categories.hpp"
#include "fraudast/rng.hpp"
#include "fraudast/transaction.hpp"

namespace fraudast {

enum class Population { Overall, Fraud };

struct GaussParams {
    double mean = 0.0;
    double std = 1.0;
};

/// Per-category inter-transaction interval distributions. The source data
/// does not publish these, so they are configuration: a global default per
/// population plus optional per-category overrides.
struct IntervalTable {
    GaussParams overall_default{240.0, 120.0};
    GaussParams fraud_default{30.0, 20.0};
    std::array<std::optional<GaussParams>, kCategoryCount> overall_override{};
    std::array<std::optional<GaussParams>, kCategoryCount> fraud_override{};

    GaussParams params(MerchantCategory c, Population pop) const {
        const auto i = static_cast<std::size_t>(category_index(c));
        if (pop == Population::Overall) return overall_override[i].value_or(overall_default);
        return fraud_override[i].value_or(fraud_default);
    }
};

/// Gaussian draw truncated below at `floor`: resample up to 100 times, then
/// clamp. Exposed for tests; the expected value of the result is the
/// truncated-normal mean, not `params.mean`.
double sample_truncated_gauss(Rng& rng, GaussParams params, double floor);

double sample_amount(Rng& rng, MerchantCategory c, Population pop);
double sample_interval(Rng& rng, MerchantCategory c, Population pop, const IntervalTable& table);

/// One transaction drawn from the given population's distributions for the
/// category. Account, timestamp and card count are left at defaults; the
/// dataset generator fills them in.
Transaction sample_transaction(Rng& rng, MerchantCategory c, Population pop,
                               const IntervalTable& table);

/// Synthetic labeled dataset: `n_accounts` accounts with `txns_per_account`
/// time-ordered transactions each; every transaction is fraud independently
/// with probability `fraud_rate`, with category, amount and interval drawn
/// from the matching population.
TransactionSet generate_dataset(Rng& rng, std::size_t n_accounts, std::size_t txns_per_account,
                                double fraud_rate, const IntervalTable& table);

/// Writes a set in the delimiter-separated format `load_dataset` reads
/// (header: timestamp,account,category,amount,is_fraud).
void write_dataset(const TransactionSet& set, const std::string& path, char delimiter = ',');

} // namespace fraudast
