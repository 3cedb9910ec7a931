#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fftower/factor.hpp"
#include "fftower/orders.hpp"
#include "fftower/tower.hpp"

namespace fftower {
namespace report {

struct OrdersRow {
  int n = 0;
  FactoredInteger group;
  orders::OrderResult order_x;
  std::optional<orders::OrderResult> order_delta;
  std::string log2_x;                 // one decimal, round half up
  std::optional<std::string> log2_delta;
  std::string status;                 // "exact" or "divisor"
};

struct OrdersTable {
  TowerSpec spec;
  std::vector<OrdersRow> rows;
};

struct TableOptions {
  bool with_delta = false;
  FactorOptions factor;
  FactorHints hints;
};

// Builds the tower to `levels`, certifying each extension, and computes the
// (possibly lower-bounded) multiplicative orders per level.
OrdersTable build_orders_table(const TowerSpec& spec, int levels, const TableOptions& opts);

// n,log2_order_x,log2_order_delta,order_x,order_delta,status
// Delta cells are left empty when delta orders were not requested.
void write_csv(std::ostream& os, const OrdersTable& table);

// Same content as JSON; delta fields are null when absent.
void write_json(std::ostream& os, const OrdersTable& table);

}  // namespace report
}  // namespace fftower
