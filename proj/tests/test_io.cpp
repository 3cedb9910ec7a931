#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fftower/report.hpp"
#include "fftower/spec_io.hpp"
#include "fftower/tower.hpp"

using namespace fftower;

TEST_CASE("spec JSON round trip, odd characteristic") {
  TowerSpec spec = TowerSpec::make(3, Family::f1, 2, 1);
  std::string text = spec_io::spec_to_json_string(spec);
  TowerSpec back = spec_io::spec_from_json_string(text);
  CHECK(back.q == spec.q);
  CHECK(back.family == spec.family);
  CHECK(back.init_a == spec.init_a);
  CHECK(back.init_b == spec.init_b);
  CHECK(back.v_coeffs == spec.v_coeffs);
  REQUIRE(back.delta_rec.has_value());
  CHECK(back.delta_rec->a_coeffs == spec.delta_rec->a_coeffs);
  CHECK(back.delta_rec->b_coeffs == spec.delta_rec->b_coeffs);
  // serialization is deterministic
  CHECK(spec_io::spec_to_json_string(back) == text);
}

TEST_CASE("spec JSON round trip, characteristic 2") {
  TowerSpec spec = TowerSpec::make(2, Family::f7);
  std::string text = spec_io::spec_to_json_string(spec);
  TowerSpec back = spec_io::spec_from_json_string(text);
  CHECK(back.q == 2);
  CHECK(back.family == Family::f7);
  CHECK(back.e == 1);
  CHECK(back.h_coeffs == spec.h_coeffs);
  CHECK(back.v_coeffs == spec.v_coeffs);
}

TEST_CASE("spec JSON rejects malformed input") {
  CHECK_THROWS(spec_io::spec_from_json_string("{"));
  CHECK_THROWS(spec_io::spec_from_json_string("[]"));
  CHECK_THROWS(spec_io::spec_from_json_string("{\"q\":\"3\"}"));
  std::string good = spec_io::spec_to_json_string(TowerSpec::make(3, Family::f1, 2, 1));
  std::string bad = good;
  bad.replace(bad.find("\"f1\""), 4, "\"f9\"");
  CHECK_THROWS(spec_io::spec_from_json_string(bad));
}

TEST_CASE("spec file round trip") {
  std::string path = "/tmp/fftower_test_spec.json";
  TowerSpec spec = TowerSpec::make(5, Family::f2, 3, 2);
  spec_io::save_spec(path, spec);
  TowerSpec back = spec_io::load_spec(path);
  CHECK(back.q == 5);
  CHECK(back.family == Family::f2);
  CHECK(back.v_coeffs == std::vector<uint64_t>{0, 1, 1, 4});
  std::remove(path.c_str());
  CHECK_THROWS(spec_io::load_spec(path));
}

TEST_CASE("hints parsing") {
  FactorHints h = spec_io::hints_from_json_string(
      R"([{"n":"63","factors":[["3",2],["7",1]]}])");
  REQUIRE(h.count(63) == 1);
  CHECK(h[63].complete());
  CHECK(h[63].factors == std::map<Bigint, unsigned>{{3, 2}, {7, 1}});

  h = spec_io::hints_from_json_string(
      R"([{"n":"80","factors":[["2",4]],"cofactor":"5"}])");
  CHECK(h[80].cofactor == 5);
  CHECK(h[80].consistent());

  // 4 is not prime
  CHECK_THROWS(spec_io::hints_from_json_string(R"([{"n":"8","factors":[["4",1]],"cofactor":"2"}])"));
  // product mismatch
  CHECK_THROWS(spec_io::hints_from_json_string(R"([{"n":"63","factors":[["3",1],["7",1]]}])"));
  CHECK_THROWS(spec_io::hints_from_json_string("{}"));
}

TEST_CASE("orders table CSV golden output") {
  TowerSpec spec = TowerSpec::make(3, Family::f1, 2, 1);
  report::TableOptions opts;
  opts.with_delta = true;
  report::OrdersTable table = report::build_orders_table(spec, 3, opts);
  std::ostringstream os;
  report::write_csv(os, table);
  CHECK(os.str() ==
        "n,log2_order_x,log2_order_delta,order_x,order_delta,status\n"
        "1,3.0,3.0,8,8,exact\n"
        "2,6.3,6.3,80,80,exact\n"
        "3,12.7,12.7,6560,6560,exact\n");

  // byte-identical across runs
  report::OrdersTable again = report::build_orders_table(spec, 3, opts);
  std::ostringstream os2;
  report::write_csv(os2, again);
  CHECK(os2.str() == os.str());
}

TEST_CASE("orders table CSV without delta leaves cells empty") {
  TowerSpec spec = TowerSpec::make(3, Family::f1, 2, 1);
  report::TableOptions opts;
  report::OrdersTable table = report::build_orders_table(spec, 1, opts);
  std::ostringstream os;
  report::write_csv(os, table);
  CHECK(os.str() ==
        "n,log2_order_x,log2_order_delta,order_x,order_delta,status\n"
        "1,3.0,,8,,exact\n");
}

TEST_CASE("orders table JSON output") {
  TowerSpec spec = TowerSpec::make(3, Family::f1, 2, 1);
  report::TableOptions opts;
  opts.with_delta = true;
  report::OrdersTable table = report::build_orders_table(spec, 2, opts);
  std::ostringstream os;
  report::write_json(os, table);
  nlohmann::json doc = nlohmann::json::parse(os.str());
  CHECK(doc["q"] == 3);
  CHECK(doc["family"] == "f1");
  CHECK(doc["levels"] == 2);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][1]["order_x"] == "80");
  CHECK(doc["rows"][1]["order_delta"] == "80");
  CHECK(doc["rows"][1]["status"] == "exact");
  CHECK(doc["rows"][1]["group_order"] == "80");
}

TEST_CASE("orders table JSON marks delta null in characteristic 2") {
  TowerSpec spec = TowerSpec::make(2, Family::f6);
  report::TableOptions opts;
  opts.with_delta = true;  // requested but undefined for q = 2
  report::OrdersTable table = report::build_orders_table(spec, 1, opts);
  std::ostringstream os;
  report::write_json(os, table);
  nlohmann::json doc = nlohmann::json::parse(os.str());
  CHECK(doc["rows"][0]["order_x"] == "63");
  CHECK(doc["rows"][0]["order_delta"].is_null());
  CHECK(doc["rows"][0]["log2_order_delta"].is_null());
}
