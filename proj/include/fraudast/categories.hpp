#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace fraudast {

/// The 14 merchant categories tracked by the pipeline. The enumerator order
/// is load-bearing: it fixes the one-hot layout and the stats table rows.
enum class MerchantCategory : int {
    Entertainment = 0,
    FoodDining,
    GasTransport,
    GroceryOnline,
    GroceryInPerson,
    HealthFitness,
    Home,
    KidsPets,
    MiscOnline,
    MiscInPerson,
    PersonalCare,
    ShoppingOnline,
    ShoppingInPerson,
    Travel,
};

inline constexpr std::size_t kCategoryCount = 14;

inline constexpr int category_index(MerchantCategory c) { return static_cast<int>(c); }
MerchantCategory category_from_index(int index);

/// Canonical lowercase name, e.g. "shopping-online".
std::string_view to_string(MerchantCategory c);

/// Parses a canonical name. Throws DataError on anything else.
MerchantCategory parse_category(std::string_view name);
bool try_parse_category(std::string_view name, MerchantCategory& out);

/// Population statistics for one merchant category: share of transactions and
/// the amount distribution, for the overall book and for fraud specifically.
struct CategoryStats {
    double overall_portion;
    double overall_mean;
    double overall_std;
    double fraud_portion;
    double fraud_mean;
    double fraud_std;
};

const CategoryStats& category_stats(MerchantCategory c);

/// Category shares renormalized into a proper probability vector (the raw
/// portions are rounded to whole percent and sum to 0.99).
std::array<double, kCategoryCount> overall_category_pmf();
std::array<double, kCategoryCount> fraud_category_pmf();

} // namespace fraudast
