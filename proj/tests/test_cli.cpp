#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bicatmnd/cli.hpp"
#include "bicatmnd/corpus.hpp"
#include "bicatmnd/fixtures.hpp"

using namespace bicatmnd;
using cli::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ceil_text() { return read_file(std::string(BICATMND_FIXTURES) + "/ceil.monad.json"); }

const std::string kArrow = R"("Arrow": {
      "objects": ["0", "1"],
      "morphisms": [["id0", "0", "0"], ["id1", "1", "1"], ["a", "0", "1"]],
      "identities": {"0": "id0", "1": "id1"},
      "compose": [["id0", "id0", "id0"], ["id1", "id1", "id1"], ["id0", "a", "a"], ["a", "id1", "a"]]
    })";

bool same_monad(const Monad& a, const Monad& b) {
  return a.ob == b.ob && a.endo == b.endo && a.unit == b.unit && a.mult == b.mult;
}

}  // namespace

TEST_CASE("the ceil fixture parses to Arrow and CeilM") {
  const auto ws = cli::parse_workspace(ceil_text());
  REQUIRE(ws.categories.count("Arrow") == 1);
  REQUIRE(ws.monads.count("CeilM") == 1);
  CHECK(ws.categories.at("Arrow").value == corpus::arrow());
  CHECK(same_monad(ws.monads.at("CeilM").value, fixtures::ceil_monad()));
  CHECK(ws.kind_of("CeilM") == std::optional<std::string>("monad"));
  CHECK(ws.kind_of("Ceil.eta") == std::optional<std::string>("transformation"));
  CHECK_FALSE(ws.kind_of("nothing").has_value());
}

TEST_CASE("a compose entry naming a missing morphism is an unresolved name") {
  std::string text = ceil_text();
  const std::string from = R"(["a", "id1", "a"])";
  text.replace(text.find(from), from.size(), R"(["a", "id1", "zz"])");
  try {
    cli::parse_workspace(text);
    FAIL("expected an error");
  } catch (const UnresolvedNameError& e) {
    CHECK(e.name() == "zz");
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }
  const auto r = cli::run_command_text(text, "validate", {});
  CHECK(r.status == 2);
  CHECK(r.doc["error"]["kind"] == "unresolved");
}

TEST_CASE("duplicate declaration names are structural errors") {
  const std::string same_section = "{\"categories\": {" + kArrow + ", " + kArrow + "}}";
  CHECK_THROWS_AS(cli::parse_workspace(same_section), StructuralError);

  std::string cross = ceil_text();
  const std::string key = "\"monads\": {";
  cross.insert(cross.find(key) + key.size(),
               R"("Ceil": {"category": "Arrow", "endo": "Ceil", "unit": "Ceil.eta", "mult": "Ceil.mu"}, )");
  CHECK_THROWS_AS(cli::parse_workspace(cross), StructuralError);
  CHECK(cli::run_command_text(cross, "validate", {}).doc["error"]["kind"] == "structural");
}

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"categories\": {\n    \"A\": [1, 2,,]\n  }\n}\n";
  try {
    cli::parse_workspace(text);
    FAIL("expected an error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 16);
  }
  const auto r = cli::run_command_text(text, "validate", {});
  CHECK(r.status == 2);
  CHECK(r.doc["error"]["kind"] == "syntax");
  CHECK(r.doc["error"]["message"].get<std::string>().find("3:16") != std::string::npos);
}

TEST_CASE("other structural violations are rejected on load") {
  // mult with the wrong components
  std::string text = ceil_text();
  const std::string from = R"("components": {"0": "id1", "1": "id1"})";
  text.replace(text.find(from), from.size(), R"("components": {"0": "a", "1": "id1"})");
  CHECK_THROWS_AS(cli::parse_workspace(text), InputError);
  CHECK_THROWS_AS(cli::parse_workspace(R"({"schema_version": 2})"), StructuralError);
  CHECK_THROWS_AS(cli::parse_workspace(R"({"widgets": {}})"), StructuralError);
  CHECK_THROWS_AS(cli::parse_workspace(R"({"bounds": {"max_objects": "six"}})"), StructuralError);
}

TEST_CASE("size bounds give a resource error") {
  const std::string text = R"({"bounds": {"max_objects": 1}, "categories": {)" + kArrow + "}}";
  CHECK_THROWS_AS(cli::parse_workspace(text), ResourceBoundError);
  CHECK(cli::run_command_text(text, "validate", {}).status == 3);
  cli::Options o;
  o.bound = 1;
  CHECK(cli::run_command_text(std::nullopt, "em", {"CeilM"}, o).status == 3);
}

TEST_CASE("categories round-trip through the wire format") {
  for (const auto& c : corpus::categories()) {
    CAPTURE(c.name());
    const json doc = {{"categories", {{c.name(), cli::category_json(c)}}}};
    const auto ws = cli::parse_workspace(doc.dump());
    CHECK(ws.categories.at(c.name()).value == c);
    CHECK(cli::serialize(ws)["categories"] == doc["categories"]);
  }
}

TEST_CASE("monads round-trip through the wire format") {
  for (const auto& [name, m] : fixtures::monads()) {
    CAPTURE(name);
    cli::WorkspaceWriter w;
    const std::string n = w.add_monad(m, name);
    const std::string text = w.to_json().dump(2);
    const auto ws = cli::parse_workspace(text);
    CHECK(same_monad(ws.monad(n), m));
    // serialize is stable under a second pass
    const std::string once = cli::serialize(ws).dump();
    CHECK(cli::serialize(cli::parse_workspace(once)).dump() == once);
  }
}

TEST_CASE("adjunctions round-trip through the writer") {
  for (const auto& [name, a] : fixtures::adjunctions()) {
    CAPTURE(name);
    cli::WorkspaceWriter w;
    const std::string n = w.add_adjunction(a, name);
    const auto ws = cli::parse_workspace(w.to_json().dump());
    const auto b = ws.adjunction(n);
    CHECK(b.left == a.left);
    CHECK(b.right == a.right);
    CHECK(b.unit == a.unit);
    CHECK(b.counit == a.counit);
  }
}

TEST_CASE("reports are deterministic") {
  const auto text = ceil_text();
  for (const std::string cmd : {"validate", "em", "kleisli", "mnd2adj"}) {
    CAPTURE(cmd);
    const std::vector<std::string> names = cmd == "validate" ? std::vector<std::string>{} : std::vector<std::string>{"CeilM"};
    const auto r1 = cli::run_command_text(text, cmd, names);
    const auto r2 = cli::run_command_text(text, cmd, names);
    CHECK(r1.doc.contains("timing_ms"));
    CHECK(cli::without_timing(r1.doc).dump() == cli::without_timing(r2.doc).dump());
    CHECK(cli::render_text(cli::without_timing(r1.doc)) == cli::render_text(cli::without_timing(r2.doc)));
  }
}

TEST_CASE("em CeilM embeds a one-object category and a universality verdict") {
  const auto r = cli::run_command_text(ceil_text(), "em", {"CeilM"});
  CHECK(r.status == 0);
  CHECK(r.doc["schema_version"] == cli::kSchemaVersion);
  CHECK(r.doc["verdicts"]["universal"] == true);
  CHECK(r.doc["samples"] == json::array({"One", "Arrow"}));
  CHECK(r.doc["payload"]["objects"] == 1);
  CHECK(r.doc["payload"]["morphisms"] == 1);
  CHECK(r.doc["violations"].empty());
  CHECK(r.doc["error"].is_null());
}

TEST_CASE("em and kleisli payloads re-ingest and re-validate") {
  for (const auto& [name, m] : fixtures::monads()) {
    for (const std::string cmd : {"em", "kleisli"}) {
      CAPTURE(name);
      CAPTURE(cmd);
      const auto r = cli::run_command(cli::Workspace{}, cmd, {name});
      REQUIRE(r.status == 0);
      const std::string payload = r.doc["payload"]["workspace"].dump();
      const auto ws = cli::parse_workspace(payload);
      const auto v = cli::run_command(ws, "validate", {});
      CHECK(v.status == 0);
      // the declared cone or cocone is rechecked as a universal one
      const std::string cone = r.doc["payload"][cmd == "em" ? "cone" : "cocone"];
      const auto again = cli::run_command(ws, cmd, {cone});
      CHECK(again.status == 0);
      CHECK(again.doc["verdicts"]["universal"] == true);
    }
  }
}

TEST_CASE("monadicity verdicts set the exit status") {
  const auto yes = cli::run_command(cli::Workspace{}, "monadic", {"FreeCeil"});
  CHECK(yes.status == 0);
  CHECK(yes.doc["payload"].contains("comparison"));
  CHECK(yes.doc["payload"]["workspace"]["functors"].size() == 1);
  const auto no = cli::run_command(cli::Workspace{}, "monadic", {"PickZero"});
  CHECK(no.status == 1);
  CHECK(no.doc["verdicts"]["monadic"] == false);
  CHECK(no.doc["verdicts"]["agree"] == true);
}

TEST_CASE("laws CatFin over the default corpus") {
  cli::Options o;
  o.samples = {"default"};
  const auto r = cli::run_command(cli::Workspace{}, "laws", {"CatFin"}, o);
  CHECK(r.status == 0);
  CHECK(r.doc["violations"].empty());
  CHECK(r.doc["samples"] == json::array({"One", "Arrow", "Iso2", "Disc2", "Mono"}));
}

TEST_CASE("the remaining commands") {
  const cli::Workspace ws;
  CHECK(cli::run_command(ws, "compose-dl", {"CeilCeil"}).status == 0);
  const auto adj = cli::run_command(ws, "adj2mnd", {"FreeCeil"});
  CHECK(adj.status == 0);
  const auto back = cli::parse_workspace(adj.doc["payload"]["workspace"].dump());
  CHECK(same_monad(back.monad(adj.doc["payload"]["monad"]), adjunction_to_monad(*cat_fin_bicat(), fixtures::free_ceil())));
  CHECK(cli::run_command(ws, "comparison", {"FreeCeil"}).status == 0);
  CHECK(cli::run_command(ws, "duals", {"PickZero"}).status == 0);
  CHECK(cli::run_command(ws, "mnd2adj", {"Swap"}).status == 0);
}

TEST_CASE("input errors give status 2") {
  const cli::Workspace ws;
  CHECK(cli::run_command(ws, "em", {"NoSuchMonad"}).status == 2);
  CHECK(cli::run_command(ws, "em", {}).status == 2);
  CHECK(cli::run_command(ws, "frobnicate", {"CeilM"}).status == 2);
  CHECK(cli::run_command(ws, "laws", {"NotABicategory"}).status == 2);
  const auto r = cli::run_command(ws, "em", {"NoSuchMonad"});
  CHECK(r.doc["error"]["kind"] == "unresolved");
  CHECK(cli::render_text(r.doc).find("NoSuchMonad") != std::string::npos);
}

TEST_CASE("sample sets resolve through declarations") {
  std::string text = ceil_text();
  const std::string from = R"("small": ["One", "Arrow"])";
  text.replace(text.find(from), from.size(), R"("small": ["One"], "pair": ["small", "Iso2"])");
  const auto ws = cli::parse_workspace(text);
  const auto cats = ws.sample_categories({"pair"});
  REQUIRE(cats.size() == 2);
  CHECK(cats[0].name() == "One");
  CHECK(cats[1].name() == "Iso2");
  cli::Options o;
  o.samples = {"pair"};
  const auto r = cli::run_command(ws, "em", {"CeilM"}, o);
  CHECK(r.doc["samples"] == json::array({"One", "Iso2"}));
  CHECK(r.doc["payload"]["universality"]["samples"].size() == 2);
}
