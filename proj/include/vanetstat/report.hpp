// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vanetstat/pmf.hpp"

namespace vanetstat {

inline constexpr char const* kToolVersion = "0.1.0";

struct PmfRow
{
    Statistic statistic;
    int r;
    std::optional<double> analytic;
    std::optional<double> empirical;
    std::optional<double> oracle;
};

//! Long-format summary row, e.g. (clust_num, mean, closed_form, 4.98).
struct SummaryRow
{
    std::string statistic;
    std::string quantity;
    std::string source;
    double value;
};

/*!
 * Tables written by every subcommand: the PMF table with one row per support
 * point and one column per source, and the long-format moments table.
 */
class Report
{
  public:
    void add_meta(std::string key, std::string value);
    //! Merge a PMF into the column named by its source.
    void add_pmf(Statistic stat, Pmf const& pmf);
    void add_summary(std::string statistic, std::string quantity, std::string source,
                     double value);

    std::vector<std::pair<std::string, std::string>> const& meta() const { return meta_; }
    std::vector<PmfRow> const& pmf_rows() const { return rows_; }
    std::vector<SummaryRow> const& summary_rows() const { return summary_; }

    //! `statistic,r,prob_analytic,prob_empirical,prob_oracle`, '#' metadata header.
    void write_pmf_csv(std::ostream& os) const;
    //! `statistic,quantity,source,value`, same metadata header.
    void write_moments_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

  private:
    void write_header(std::ostream& os) const;

    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<PmfRow> rows_;
    std::vector<SummaryRow> summary_;
};

//! Sibling path for the moments table: run.csv -> run.moments.csv.
std::filesystem::path moments_path_for(std::filesystem::path const& pmf_path);

}  // namespace vanetstat
