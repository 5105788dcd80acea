#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fpbl/asymptotics.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/series.hpp"

namespace fpbl {

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(const std::string& text);

/// A table cell. Text holds exact values (big integers, "num/den") and is
/// emitted as a JSON string; doubles use the shortest round-trip decimal.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;  ///< CSV "# key=value" lines, JSON top-level keys
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(const Table& table, std::ostream& out);
/// {meta..., "columns": [...], "rows": [[...], ...]}, two-space indent.
void write_json(const Table& table, std::ostream& out);
void write_table(const Table& table, OutputFormat format, std::ostream& out);

/// Re-serialises a JSON document in the canonical layout used by the
/// writers. Emitted files are fixed points of this function.
std::string canonical_json(const std::string& text);

/// n,k,value,mode. Polynomial tables emit one row per (n, k); value tables
/// leave k empty.
Table series_to_table(const SeriesTable& table);
/// k,count
Table counts_to_table(const std::vector<BigInt>& counts);
/// k,probability with probability "num/den" or a double.
Table pmf_to_table(const FixedPointPMF& pmf);
/// {"n", "q", "tau", "mode", "provenance", "weights": [[k, "num/den"], ...],
///  "seed", "stream_id", "samples"}; seed fields are null unless Monte-Carlo.
std::string pmf_to_json(const FixedPointPMF& pmf);
/// n,q,tau,law,distance,mode
Table distances_to_table(const std::vector<DistanceRow>& rows, const Rational& q, const LimitLawSpec& law);
/// n,exact,predicted,ratio
Table convergence_to_table(const ConvergenceTable& table);

}  // namespace fpbl
