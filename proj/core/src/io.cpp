#include "fpbl/io.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fpbl {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      c);
}

Json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      c);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string tau_cell(const std::optional<Pattern3>& tau) { return tau ? to_string(*tau) : std::string("none"); }

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv or json)");
}

void write_csv(const Table& table, std::ostream& out) {
  for (const auto& [k, v] : table.meta) out << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  Json j = Json::object();
  for (const auto& [k, v] : table.meta) j[k] = v;
  j["columns"] = table.columns;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(json_cell(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  out << dump(j);
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

std::string canonical_json(const std::string& text) { return dump(Json::parse(text)); }

Table series_to_table(const SeriesTable& table) {
  Table t;
  t.columns = {"n", "k", "value", "mode"};
  const std::string mode = to_string(table.mode);
  std::visit(
      [&](const auto& values) {
        using V = typename std::decay_t<decltype(values)>::value_type;
        for (std::size_t n = 0; n < values.size(); ++n) {
          if constexpr (std::is_same_v<V, QPolynomial>) {
            const auto& c = values[n].coeffs();
            for (std::size_t k = 0; k < c.size(); ++k)
              t.rows.push_back({std::uint64_t{n}, std::uint64_t{k}, to_string(c[k]), mode});
          } else if constexpr (std::is_same_v<V, Rational>) {
            t.rows.push_back({std::uint64_t{n}, std::monostate{}, to_string(values[n]), mode});
          } else {
            t.rows.push_back({std::uint64_t{n}, std::monostate{}, values[n], mode});
          }
        }
      },
      table.values);
  return t;
}

Table counts_to_table(const std::vector<BigInt>& counts) {
  Table t;
  t.columns = {"k", "count"};
  for (std::size_t k = 0; k < counts.size(); ++k) t.rows.push_back({std::uint64_t{k}, to_string(counts[k])});
  return t;
}

Table pmf_to_table(const FixedPointPMF& pmf) {
  Table t;
  t.columns = {"k", "probability"};
  if (pmf.is_exact()) {
    const auto& w = pmf.exact_weights();
    for (std::size_t k = 0; k < w.size(); ++k) t.rows.push_back({std::uint64_t{k}, to_string(w[k])});
  } else {
    const auto p = pmf.probabilities();
    for (std::size_t k = 0; k < p.size(); ++k) t.rows.push_back({std::uint64_t{k}, p[k]});
  }
  return t;
}

std::string pmf_to_json(const FixedPointPMF& pmf) {
  Json j = Json::object();
  j["n"] = pmf.n();
  j["q"] = to_string(pmf.spec().q);
  j["tau"] = pmf.spec().tau ? Json(to_string(*pmf.spec().tau)) : Json(nullptr);
  j["mode"] = pmf.is_exact() ? "exact" : pmf.provenance() == Provenance::monte_carlo ? "monte-carlo" : "scaled-float";
  j["provenance"] = to_string(pmf.provenance());
  Json w = Json::array();
  if (pmf.is_exact()) {
    const auto& e = pmf.exact_weights();
    for (std::size_t k = 0; k < e.size(); ++k) w.push_back(Json::array({k, to_string(e[k])}));
  } else {
    const auto p = pmf.probabilities();
    for (std::size_t k = 0; k < p.size(); ++k) w.push_back(Json::array({k, p[k]}));
  }
  j["weights"] = std::move(w);
  const auto& mc = pmf.monte_carlo();
  j["seed"] = mc ? Json(mc->seed) : Json(nullptr);
  j["stream_id"] = mc ? Json(mc->stream_id) : Json(nullptr);
  j["samples"] = mc ? Json(mc->samples) : Json(nullptr);
  return dump(j);
}

Table distances_to_table(const std::vector<DistanceRow>& rows, const Rational& q, const LimitLawSpec& law) {
  Table t;
  t.columns = {"n", "q", "tau", "law", "distance", "mode"};
  for (const auto& r : rows) {
    t.rows.push_back({std::uint64_t{r.n}, to_string(q), tau_cell(law.tau), law.law.name(), r.distance, to_string(r.mode)});
  }
  return t;
}

Table convergence_to_table(const ConvergenceTable& table) {
  Table t;
  t.columns = {"n", "exact", "predicted", "ratio"};
  for (const auto& r : table.rows) t.rows.push_back({std::uint64_t{r.n}, r.exact, r.predicted_log, r.ratio});
  return t;
}

}  // namespace fpbl
