#pragma once

#include <map>
#include <string>
#include <vector>

namespace cricnet {

struct NumericColumn {
    std::string name;
    std::vector<double> values;
};

struct CategoricalColumn {
    std::string name;
    std::vector<std::string> values;
};

// Column-major design matrix with an intercept first. Exactly collinear
// columns are pruned at encode time (the intercept always stays) and listed
// in `pruned`, so downstream fits see a full-rank matrix.
struct DesignMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::size_t n_rows = 0;
    std::map<std::string, std::string> reference_levels;  // categorical -> dropped level
    std::vector<std::string> pruned;

    std::size_t n_cols() const { return columns.size(); }
    const std::vector<double>& column(const std::string& name) const;
    void add_column(std::string name, std::vector<double> values);
};

inline constexpr const char* kInterceptName = "(intercept)";

// Dummy coding: one indicator per level except the lexicographically
// smallest (the reference). Throws DegenerateError when y is constant.
DesignMatrix encode_fixed_effects(const std::vector<double>& y,
                                  const std::vector<NumericColumn>& numeric,
                                  const std::vector<CategoricalColumn>& categoricals);

struct VifReport {
    std::map<std::string, double> values;             // finite VIFs per non-intercept column
    std::vector<std::string> perfectly_collinear;     // columns with R^2_j ~ 1
};

// VIF_j = 1 / (1 - R^2_j), regressing column j on all other columns.
// Requires at least two non-intercept columns.
VifReport vif(const DesignMatrix& design);

}  // namespace cricnet
