#include "fftower/report.hpp"

#include <json.hpp>

namespace fftower {
namespace report {

namespace {

std::string factored_string(const FactoredInteger& f) {
  std::string out;
  for (const auto& [p, e] : f.factors) {
    if (!out.empty()) out += " * ";
    out += p.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (f.cofactor != 1) {
    if (!out.empty()) out += " * ";
    out += "C" + f.cofactor.get_str();
  }
  if (out.empty()) out = "1";
  return out;
}

const char* kind_name(orders::OrderResult::Kind k) {
  return k == orders::OrderResult::Kind::exact ? "exact" : "divisor";
}

}  // namespace

OrdersTable build_orders_table(const TowerSpec& spec, int levels, const TableOptions& opts) {
  if (levels < 1) throw std::invalid_argument("build_orders_table: need at least one level");
  OrdersTable table;
  table.spec = spec;
  TowerState ts(spec);
  ts.extend_to(levels);
  orders::GroupOrderFactory factory(opts.factor, opts.hints);
  bool delta = opts.with_delta && !spec.char2();
  for (int n = 1; n <= levels; ++n) {
    OrdersRow row;
    row.n = n;
    row.group = factory.factor_group_order(spec.q, n);
    row.order_x = orders::multiplicative_order(ts.field(), ts.x(n), row.group);
    row.log2_x = log2_one_decimal(row.order_x.order);
    bool exact = row.order_x.kind == orders::OrderResult::Kind::exact;
    if (delta) {
      row.order_delta = orders::multiplicative_order(ts.field(), ts.delta(n), row.group);
      row.log2_delta = log2_one_decimal(row.order_delta->order);
      exact = exact && row.order_delta->kind == orders::OrderResult::Kind::exact;
    }
    row.status = exact ? "exact" : "divisor";
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(std::ostream& os, const OrdersTable& table) {
  os << "n,log2_order_x,log2_order_delta,order_x,order_delta,status\n";
  for (const OrdersRow& row : table.rows) {
    os << row.n << ',' << row.log2_x << ',';
    if (row.log2_delta) os << *row.log2_delta;
    os << ',' << row.order_x.order.get_str() << ',';
    if (row.order_delta) os << row.order_delta->order.get_str();
    os << ',' << row.status << '\n';
  }
}

void write_json(std::ostream& os, const OrdersTable& table) {
  nlohmann::ordered_json doc;
  doc["q"] = table.spec.q;
  doc["family"] = family_name(table.spec.family);
  doc["levels"] = table.rows.size();
  doc["rows"] = nlohmann::ordered_json::array();
  for (const OrdersRow& row : table.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    r["group_order"] = row.group.value.get_str();
    r["group_factored"] = factored_string(row.group);
    r["order_x"] = row.order_x.order.get_str();
    r["order_x_kind"] = kind_name(row.order_x.kind);
    r["log2_order_x"] = row.log2_x;
    if (row.order_delta) {
      r["order_delta"] = row.order_delta->order.get_str();
      r["order_delta_kind"] = kind_name(row.order_delta->kind);
      r["log2_order_delta"] = *row.log2_delta;
    } else {
      r["order_delta"] = nullptr;
      r["order_delta_kind"] = nullptr;
      r["log2_order_delta"] = nullptr;
    }
    r["status"] = row.status;
    doc["rows"].push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace report
}  // namespace fftower
