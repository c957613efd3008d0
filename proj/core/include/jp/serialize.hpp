#pragma once

#include "jp/bivariate_series.hpp"
#include "jp/counting.hpp"
#include "jp/jagged.hpp"
#include "jp/overpartition.hpp"
#include "jp/power_series.hpp"
#include "jp/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jp {

// Deterministic machine-readable emission: fixed key order, decimal integer
// strings, '\n' separators, no locale dependence.

std::string to_json(const PowerSeries& f);
std::string to_json(const BivariateSeries& f);
std::string to_json(const std::vector<Parts>& partitions);
std::string to_json(const Overpartition& o);
std::string to_json(const IdentityReport& r);
std::string to_json(const std::vector<IdentityReport>& reports);

/// CSV with columns K,i_or_j,m,n,count for one boundary index.
std::string count_table_csv(const JaggedCounts& counts, char kind, int index);
/// CSV with columns n,count.
std::string sequence_csv(const std::vector<std::pair<int, long long>>& rows);
/// CSV coefficient table: header "z\\q",0,1,...; one row per z-exponent.
std::string series_csv(const BivariateSeries& f);
std::string series_csv(const PowerSeries& f);

std::string to_text(const std::vector<Parts>& partitions);
std::string to_text(const IdentityReport& r);

}  // namespace jp
