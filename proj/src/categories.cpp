#include "fraudast/categories.hpp"

#include <stdexcept>

#include "fraudast/errors.hpp"

namespace fraudast {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kNames = {
    "entertainment",
    "food/dining",
    "gas/transport",
    "grocery-online",
    "grocery-in-person",
    "health/fitness",
    "home",
    "kids/pets",
    "misc-online",
    "misc-in-person",
    "personal-care",
    "shopping-online",
    "shopping-in-person",
    "travel",
};

// Overall vs fraud transaction statistics per merchant category:
// {overall portion, overall $ mean, overall $ stdev,
//  fraud portion, fraud $ mean, fraud $ stdev}.
constexpr std::array<CategoryStats, kCategoryCount> kStats = {{
    {0.07, 64, 64, 0.03, 510, 74},    // entertainment
    {0.07, 51, 48, 0.03, 122, 14},    // food/dining
    {0.10, 64, 16, 0.07, 12, 5},      // gas/transport
    {0.03, 54, 23, 0.02, 12, 3},      // grocery-online
    {0.09, 116, 52, 0.23, 313, 27},   // grocery-in-person
    {0.07, 54, 48, 0.02, 20, 2},      // health/fitness
    {0.09, 58, 48, 0.03, 258, 47},    // home
    {0.09, 58, 49, 0.03, 20, 3},      // kids/pets
    {0.05, 79, 164, 0.13, 804, 87},   // misc-online
    {0.06, 62, 134, 0.03, 193, 316},  // misc-in-person
    {0.07, 48, 49, 0.03, 26, 12},     // personal-care
    {0.08, 83, 237, 0.24, 994, 95},   // shopping-online
    {0.09, 77, 232, 0.10, 887, 131},  // shopping-in-person
    {0.03, 112, 596, 0.00, 9, 2},     // travel
}};

} // namespace

MerchantCategory category_from_index(int index) {
    if (index < 0 || index >= static_cast<int>(kCategoryCount)) {
        throw std::out_of_range("merchant category index out of range: " + std::to_string(index));
    }
    return static_cast<MerchantCategory>(index);
}

std::string_view to_string(MerchantCategory c) {
    return kNames[static_cast<std::size_t>(category_index(c))];
}

bool try_parse_category(std::string_view name, MerchantCategory& out) {
    for (std::size_t i = 0; i < kCategoryCount; ++i) {
        if (kNames[i] == name) {
            out = static_cast<MerchantCategory>(i);
            return true;
        }
    }
    return false;
}

MerchantCategory parse_category(std::string_view name) {
    MerchantCategory c;
    if (!try_parse_category(name, c)) {
        throw DataError("unknown merchant category '" + std::string(name) + "'");
    }
    return c;
}

const CategoryStats& category_stats(MerchantCategory c) {
    return kStats[static_cast<std::size_t>(category_index(c))];
}

namespace {

std::array<double, kCategoryCount> renormalized(double CategoryStats::* portion) {
    std::array<double, kCategoryCount> pmf{};
    double total = 0.0;
    for (std::size_t i = 0; i < kCategoryCount; ++i) total += kStats[i].*portion;
    for (std::size_t i = 0; i < kCategoryCount; ++i) pmf[i] = kStats[i].*portion / total;
    return pmf;
}

} // namespace

std::array<double, kCategoryCount> overall_category_pmf() {
    return renormalized(&CategoryStats::overall_portion);
}

std::array<double, kCategoryCount> fraud_category_pmf() {
    return renormalized(&CategoryStats::fraud_portion);
}

} // namespace fraudast
