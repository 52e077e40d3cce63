//  Copyright 2026 The polaritykit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Command line driver: builds frames and runs verification suites.
//
// Exit codes: 0 when every requested check passes, 1 when a check fails, 2 on
// input errors (unreadable files, parse and validation errors, guards).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polaritykit/canonical_frame.hpp"
#include "polaritykit/error.hpp"
#include "polaritykit/io.hpp"
#include "polaritykit/sorted_relation.hpp"

namespace pk = polaritykit;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string format = "text";
  bool timings = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

/// Runs one suite item, timing it on request.
void run_item(pk::Report& parent, const Options& opt, const std::function<pk::Report()>& item) {
  const auto start = std::chrono::steady_clock::now();
  pk::Report r = item();
  if (opt.timings) {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  parent.add(std::move(r));
}

int emit(const pk::Report& r, const Options& opt) {
  std::cout << (opt.format == "json" ? pk::io::render_json(r, opt.timings) : pk::io::render_text(r));
  return r.passed ? kPass : kCheckFailed;
}

std::string set_text(const pk::io::FrameDoc& doc, pk::Sort s, pk::Subset set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += doc.point_name(s, i);
    first = false;
  });
  return out + "}";
}

/// A frame doc for the canonical frame, named F_a / I_a.
pk::io::FrameDoc frame_doc_of(const pk::CanonicalFrame& cf) {
  pk::io::FrameDoc doc{cf.polarity_ptr(), {}, {}, cf.relations()};
  for (pk::Point x = 0; x < cf.polarity().nx(); ++x) doc.xnames.push_back(cf.point_name(pk::Sort::one, x));
  for (pk::Point y = 0; y < cf.polarity().ny(); ++y) doc.ynames.push_back(cf.point_name(pk::Sort::dual, y));
  return doc;
}

pk::Report stable_sets_report(const pk::io::FrameDoc& doc, pk::Sort s) {
  const pk::StableLattice lattice = pk::all_stable_sets(*doc.polarity, s);
  std::string detail = std::to_string(lattice.size()) + " sets:";
  for (pk::Subset g : lattice.sets()) detail += " " + set_text(doc, s, g);
  return pk::Report::leaf(s == pk::Sort::one ? "stable-sets" : "co-stable-sets", true, detail);
}

pk::Report dm_report(const pk::Polarity& p) {
  if (!pk::is_separated(p)) {
    pk::Report r = pk::Report::leaf("dm-completion", false);
    r.fail("the frame is not separated");
    return r;
  }
  return pk::dm_completion_check(p);
}

// Suites over an arbitrary frame.

pk::Report frame_lemmas(const pk::io::FrameDoc& doc, const Options& opt) {
  pk::Report suite("lemmas");
  run_item(suite, opt, [&] { return pk::Report::leaf("separated", pk::is_separated(*doc.polarity)); });
  run_item(suite, opt, [&] { return dm_report(*doc.polarity); });
  for (const pk::SortedRelation& r : doc.relations) {
    run_item(suite, opt, [&] {
      pk::Report item(r.name() + " sections-galois");
      const pk::StabilityReport st = pk::sections_all_stable(r);
      if (!st.stable) item.fail(st.witness->describe());
      return item;
    });
  }
  return suite;
}

pk::Report additivity_suite(const std::vector<pk::SortedRelation>& relations, const Options& opt) {
  pk::Report suite("additivity");
  for (const pk::SortedRelation& r : relations) {
    for (std::size_t k = 0; k < r.sort_type().arity(); ++k) {
      run_item(suite, opt, [&] {
        pk::Report item(r.name() + " place " + std::to_string(k + 1));
        const pk::AdditivityReport a = pk::check_complete_additivity(r, k);
        if (!a.holds) item.fail(a.witness);
        return item;
      });
    }
  }
  return suite;
}

pk::Report conjugates_suite(const std::vector<pk::SortedRelation>& relations, const Options& opt) {
  pk::Report suite("conjugates");
  for (const pk::SortedRelation& r : relations) {
    const pk::StabilityReport st = pk::sections_all_stable(r);
    for (std::size_t k = 0; k < r.sort_type().arity(); ++k) {
      run_item(suite, opt, [&] {
        pk::Report item(r.name() + " place " + std::to_string(k + 1));
        const pk::EquivalenceReport eq = pk::additivity_equivalence(r, k);
        if (!eq.agree()) item.fail("additivity, conjugacy and residuation disagree");
        if (!st.stable) {
          item.fail("no conjugate relation: " + st.witness->describe(), true);
          return item;
        }
        const pk::SortedRelation s = pk::conjugate_relation_from(r, k);
        item.detail = "conjugate relation of sort type " + s.sort_type().to_string();
        if (!pk::is_conjugate_pair(r, s, k)) item.fail("the conjugacy law fails for the constructed relation", true);
        return item;
      });
    }
  }
  return suite;
}

bool wants(const std::string& suite, const char* name) { return suite == "all" || suite == name; }

// Subcommands.

int cmd_complete(const std::string& path, const Options& opt) {
  const pk::io::FrameDoc doc = pk::io::parse_frame_doc(read_file(path));
  pk::Report report("complete " + path);
  run_item(report, opt, [&] { return stable_sets_report(doc, pk::Sort::one); });
  run_item(report, opt, [&] { return stable_sets_report(doc, pk::Sort::dual); });
  run_item(report, opt, [&] { return dm_report(*doc.polarity); });
  return emit(report, opt);
}

int cmd_canonical(const std::string& path, const std::string& out, const Options& opt) {
  const pk::CanonicalFrame cf = pk::build_canonical_frame(pk::io::parse_lattice_doc(read_file(path)));
  const std::string text = pk::io::serialize_frame_doc(frame_doc_of(cf));
  if (out.empty() || out == "-") {
    std::cout << text;
    return kPass;
  }
  write_output(out, text);
  pk::Report report("canonical " + path);
  report.detail = std::to_string(cf.polarity().nx()) + " filters, " + std::to_string(cf.polarity().ny()) +
                  " ideals, " + std::to_string(cf.relations().size()) + " relations written to " + out;
  return emit(report, opt);
}

int cmd_check(const std::string& path, const std::string& suite, const Options& opt) {
  const std::string text = read_file(path);
  pk::Report report("check " + path);
  if (pk::io::detect_kind(text) == pk::io::DocKind::lattice) {
    const pk::CanonicalFrame cf = pk::build_canonical_frame(pk::io::parse_lattice_doc(text));
    if (wants(suite, "lemmas")) run_item(report, opt, [&] { return pk::verify_canonical_lemmas(cf); });
    if (wants(suite, "additivity")) report.add(additivity_suite(cf.relations(), opt));
    if (wants(suite, "conjugates")) report.add(conjugates_suite(cf.relations(), opt));
  } else {
    const pk::io::FrameDoc doc = pk::io::parse_frame_doc(text);
    if (wants(suite, "lemmas")) report.add(frame_lemmas(doc, opt));
    if (wants(suite, "additivity")) report.add(additivity_suite(doc.relations, opt));
    if (wants(suite, "conjugates")) report.add(conjugates_suite(doc.relations, opt));
  }
  return emit(report, opt);
}

int cmd_represent(const std::string& path, const Options& opt) {
  const pk::CanonicalFrame cf = pk::build_canonical_frame(pk::io::parse_lattice_doc(read_file(path)));
  pk::Report report("represent " + path);
  run_item(report, opt, [&] { return pk::zeta_isomorphism_check(cf); });
  run_item(report, opt, [&] { return pk::representation_check(cf); });
  run_item(report, opt, [&] { return pk::canonical_extension_check(cf); });
  return emit(report, opt);
}

struct RandomArgs {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t nx = 3;
  std::size_t ny = 3;
  std::size_t size = 4;
  double density = 0.5;
  std::vector<std::string> relations;
  double relation_density = 0.3;
  std::string out;
};

int cmd_random(const RandomArgs& a) {
  std::string text;
  if (a.kind == "lattice") {
    text = pk::io::serialize_lattice_doc(pk::make_expansion(pk::io::random_lattice(a.seed, a.size), {}));
  } else {
    auto p = std::make_shared<const pk::Polarity>(pk::io::random_polarity(a.seed, a.nx, a.ny, a.density));
    pk::io::FrameDoc doc{p, {}, {}, {}};
    for (std::size_t i = 0; i < a.relations.size(); ++i) {
      doc.relations.push_back(pk::io::random_relation(a.seed + i + 1, p, pk::SortType::parse(a.relations[i]),
                                                      a.relation_density, "R" + std::to_string(i + 1)));
    }
    text = pk::io::serialize_frame_doc(doc);
  }
  write_output(a.out, text);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarities, sorted relations and canonical frames of finite lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", opt.timings, "Include per-check timings");
  std::string path;
  std::string out;
  std::string suite = "all";
  RandomArgs rnd;

  auto* complete = app.add_subcommand("complete", "Stable set lattices and the Dedekind-MacNeille check of a frame");
  complete->add_option("frame", path, "Frame document")->required();

  auto* canonical = app.add_subcommand("canonical", "Canonical frame of a lattice expansion, as a frame document");
  canonical->add_option("lattice", path, "Lattice document")->required();
  canonical->add_option("-o,--output", out, "Output file (default: standard output)");

  auto* check = app.add_subcommand("check", "Run verification suites on a frame or lattice document");
  check->add_option("file", path, "Frame or lattice document")->required();
  check->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember({"lemmas", "additivity", "conjugates", "all"}));

  auto* represent = app.add_subcommand("represent", "Representation of a lattice expansion by its canonical frame");
  represent->add_option("lattice", path, "Lattice document")->required();

  auto* random = app.add_subcommand("random", "Seeded random polarity or lattice document");
  random->add_option("--kind", rnd.kind, "What to generate")->required()->check(CLI::IsMember({"polarity", "lattice"}));
  random->add_option("--seed", rnd.seed, "Seed")->required();
  random->add_option("--nx", rnd.nx, "Size of X")->check(CLI::Range(0, 64));
  random->add_option("--ny", rnd.ny, "Size of Y")->check(CLI::Range(0, 64));
  random->add_option("--density", rnd.density, "Incidence density")->check(CLI::Range(0.0, 1.0));
  random->add_option("--size", rnd.size, "Lattice size")->check(CLI::Range(1, 64));
  random->add_option("--relation", rnd.relations, "Add a random relation of this sort type, e.g. \"1;1 1\"");
  random->add_option("--relation-density", rnd.relation_density, "Tuple density of added relations")
      ->check(CLI::Range(0.0, 1.0));
  random->add_option("-o,--output", rnd.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*complete) return cmd_complete(path, opt);
    if (*canonical) return cmd_canonical(path, out, opt);
    if (*check) return cmd_check(path, suite, opt);
    if (*represent) return cmd_represent(path, opt);
    return cmd_random(rnd);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const pk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
