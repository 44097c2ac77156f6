// JSON document loaders/serializers: round trips, first-violation error
// paths, unknown-key tolerance, and byte-deterministic report rendering.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "palcheck/certify.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/families.hpp"
#include "palcheck/json_io.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/reduced.hpp"
#include "palcheck/report.hpp"

using namespace palcheck;

namespace {

// Runs fn, requires an InputError whose message contains `needle`.
void expect_input_error(const std::function<void()>& fn,
                        const std::string& needle) {
  try {
    fn();
    FAIL("expected an InputError containing: " << needle);
  } catch (const InputError& e) {
    const std::string msg = e.what();
    INFO("actual message: " << msg);
    CHECK(msg.find(needle) != std::string::npos);
  }
}

Json palette_doc_3() {
  // A valid 3-palette document with deliberately unsorted tuples and a
  // duplicate entry; the loader must canonicalize.
  return Json::parse(R"({
    "k": 3,
    "colors": ["a", "b", "c"],
    "tuples": [["b", "a", "a"], ["a", "a", "a"], ["b", "a", "a"],
               ["c", "b", "a"]]
  })");
}

}  // namespace

TEST_CASE("palette documents round-trip and canonicalize") {
  const Palette p = palette_from_json(palette_doc_3());
  CHECK(p.k == 3);
  CHECK(p.num_colors == 3);
  CHECK(p.tuples.size() == 3);  // duplicate collapsed
  CHECK(p.has_tuple({0, 0, 0}));
  CHECK(p.has_tuple({1, 0, 0}));
  CHECK(p.has_tuple({2, 1, 0}));

  const Palette again = palette_from_json(palette_to_json(p));
  CHECK(again == p);
}

TEST_CASE("family palettes survive serialization") {
  for (const FamilyId id : {FamilyId::np3_Pprime, FamilyId::np3_Pdprime,
                            FamilyId::np3_P3}) {
    const Palette p = build_named_palette(id, 3);
    CHECK(palette_from_json(palette_to_json(p)) == p);
  }
  const PaletteCertificate cert = build_family(FamilyId::frac_r, 3, 2);
  CHECK(palette_from_json(palette_to_json(cert.target)) == cert.target);
  for (const Palette& g : cert.gadgets) {
    CHECK(palette_from_json(palette_to_json(g)) == g);
  }
}

TEST_CASE("palette loader reports the first violation with its path") {
  expect_input_error([] { palette_from_json(Json::parse("[]")); },
                     "$: expected an object");
  expect_input_error(
      [] { palette_from_json(Json::parse(R"({"colors":[],"tuples":[]})")); },
      "$: missing required key \"k\"");
  {
    Json doc = palette_doc_3();
    doc["colors"][1] = "a";
    expect_input_error([&] { palette_from_json(doc); },
                       "$.colors[1]: duplicate color label 'a'");
  }
  {
    Json doc = palette_doc_3();
    doc["colors"][2] = "";
    expect_input_error([&] { palette_from_json(doc); },
                       "$.colors[2]: color label must not be empty");
  }
  {
    Json doc = palette_doc_3();
    doc["tuples"][1] = Json::array({"a", "a"});
    expect_input_error([&] { palette_from_json(doc); },
                       "$.tuples[1]: expected 3 entries, got 2");
  }
  {
    Json doc = palette_doc_3();
    doc["tuples"][3][1] = "x";
    expect_input_error([&] { palette_from_json(doc); },
                       "$.tuples[3][1]: unknown color label 'x'");
  }
}

TEST_CASE("k-graph documents round-trip, with and without an order") {
  KGraph g;
  g.n = 5;
  g.k = 3;
  g.edges = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};
  g.canonicalize();
  g.validate();

  const KGraphDoc plain = kgraph_from_json(kgraph_to_json(g));
  CHECK(plain.graph == g);
  CHECK_FALSE(plain.order.has_value());

  const std::vector<int> order = {4, 2, 0, 1, 3};
  const KGraphDoc ordered = kgraph_from_json(kgraph_to_json(g, &order));
  CHECK(ordered.graph == g);
  REQUIRE(ordered.order.has_value());
  CHECK(*ordered.order == order);
}

TEST_CASE("k-graph loader pins vertex-range and order violations") {
  Json doc;
  doc["n"] = 5;
  doc["k"] = 3;
  doc["edges"] = Json::array({Json::array({0, 1, 2})});

  {
    Json bad_doc = doc;
    bad_doc["edges"][0][1] = 7;
    expect_input_error([&] { kgraph_from_json(bad_doc); },
                       "$.edges[0][1]: vertex 7 out of range [0,5)");
  }
  {
    Json bad_doc = doc;
    bad_doc["order"] = Json::array({0, 1});
    expect_input_error([&] { kgraph_from_json(bad_doc); },
                       "$.order: expected 5 entries, got 2");
  }
  {
    Json bad_doc = doc;
    bad_doc["order"] = Json::array({0, 1, 2, 3, 3});
    expect_input_error([&] { kgraph_from_json(bad_doc); },
                       "$.order: not a permutation of 0..4");
  }
}

TEST_CASE("unknown document keys are ignored") {
  Json doc = palette_doc_3();
  doc["comment"] = "extra annotation";
  CHECK(palette_from_json(doc).num_colors == 3);

  Json gdoc;
  gdoc["n"] = 3;
  gdoc["k"] = 3;
  gdoc["edges"] = Json::array({Json::array({0, 1, 2})});
  gdoc["coloring"] = Json::array();  // sample output annotation
  CHECK(kgraph_from_json(gdoc).graph.edges.size() == 1);
}

TEST_CASE("reduced-graph documents round-trip through subset keys") {
  const Palette p = build_named_palette(FamilyId::np3_Pdprime, 3);
  const ReducedKGraph a = from_palette(p, 4);
  const Json doc = reduced_to_json(a);
  CHECK(doc["classes"].is_object());
  const ReducedKGraph again = reduced_from_json(doc);
  CHECK(again.k == a.k);
  CHECK(again.index_set == a.index_set);
  CHECK(again.classes == a.classes);
  CHECK(again.constituents == a.constituents);
  CHECK(min_constituent_density(again) == min_constituent_density(a));
}

TEST_CASE("reduced-graph loader rejects malformed subset keys") {
  const Palette p = build_named_palette(FamilyId::np3_Pdprime, 3);
  const Json good = reduced_to_json(from_palette(p, 4));
  {
    Json doc = good;
    Json broken = Json::object();
    broken["a-b"] = Json::array();
    doc["classes"] = broken;
    expect_input_error(
        [&] { reduced_from_json(doc); },
        "key \"a-b\" is not a '-'-joined list of indices");
  }
  {
    Json doc = good;
    Json broken = Json::object();
    broken["3-1"] = Json::array();
    doc["classes"] = broken;
    expect_input_error([&] { reduced_from_json(doc); },
                       "key \"3-1\" must list strictly increasing indices");
  }
}

TEST_CASE("text parsing names its origin") {
  expect_input_error([] { parse_json_text("{not json", "input.json"); },
                     "input.json: not valid JSON");
  const Json ok = parse_json_text("{\"k\": 3}", "inline");
  CHECK(ok["k"] == 3);
}

TEST_CASE("file helpers round-trip through disk") {
  const std::string path = "tmp_json_io_roundtrip.json";
  const Palette p = build_named_palette(FamilyId::np3_P3, 3);
  save_text_file(path, palette_to_json(p).dump(2) + "\n");
  CHECK(palette_from_json(load_json_file(path)) == p);
  std::remove(path.c_str());
  expect_input_error([&] { load_json_file(path); }, "cannot open file");
}

TEST_CASE("rendered reports are byte-identical across repeated runs") {
  const auto make = [] {
    Json config;
    config["theorem"] = "thm1_4_case1";
    config["k"] = 3;
    config["r"] = 3;
    const CertificateReport rep = verify_theorem("thm1_4_case1", 3, 3);
    return render_report(
        report_envelope("certify", config, certificate_report_json(rep)));
  };
  const std::string first = make();
  const std::string second = make();
  CHECK(first == second);
  CHECK(first.size() > 100);
  CHECK(first.back() == '\n');
  // Envelope keys are sorted, so the header fields appear in order.
  CHECK(first.find("\"command\": \"certify\"") != std::string::npos);
  CHECK(first.find("\"tool\": \"palcheck\"") != std::string::npos);
  CHECK(first.find("\"version\": \"1.0.0\"") != std::string::npos);
}

TEST_CASE("homomorphism results serialize with label maps") {
  const Palette p = palette_from_json(palette_doc_3());
  const HomResult h = hom_exists(p, p);
  REQUIRE(h.status == HomStatus::witness);
  const Json j = hom_result_json(p, p, h);
  CHECK(j["status"] == "witness");
  CHECK(j["map"].is_object());
  CHECK(j["map"].size() == 3);

  Palette empty_target;
  empty_target.k = 3;
  empty_target.num_colors = 1;
  empty_target.labels = {"z"};
  empty_target.validate();
  const HomResult none = hom_exists(p, empty_target);
  REQUIRE(none.status == HomStatus::none);
  CHECK(hom_result_json(p, empty_target, none)["map"].is_null());
}
