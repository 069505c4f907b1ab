#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fraudast/categories.hpp"

namespace fraudast {

/// Amounts below this are never emitted; sampling truncates here.
inline constexpr double kAmountFloorUsd = 1.0;

/// One payment event. `card_txn_count` is the number of transactions seen on
/// the account before this one (0 for the first). It is a double because
/// interpolation during minority oversampling produces fractional counts.
struct Transaction {
    std::string account_id;
    double timestamp_min = 0.0; // minutes since epoch
    MerchantCategory category = MerchantCategory::Entertainment;
    double amount_usd = 0.0;
    double interval_min = 0.0; // minutes since the account's previous transaction
    double card_txn_count = 0.0;
    bool is_fraud = false;
};

enum class Provenance { Synthetic, Ingested };

struct TransactionSet {
    std::vector<Transaction> rows;
    Provenance provenance = Provenance::Synthetic;
};

} // namespace fraudast
