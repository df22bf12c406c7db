#include "permsplit/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "permsplit/json_io.hpp"
#include "permsplit/lpm.hpp"
#include "permsplit/matroid.hpp"
#include "permsplit/subdivision.hpp"
#include "permsplit/verify/acceptance.hpp"

namespace permsplit::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { kTable, kJson, kDot };

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct Context {
  Format format = Format::kTable;
  std::string out;

  void json(const Json& j) { out += j.dump(2) + "\n"; }
  void text(const std::string& s) { out += s; }
  bool wants_json() const { return format == Format::kJson; }
  void no_dot(const std::string& command) const {
    if (format == Format::kDot) throw UsageError("--format dot applies to poset commands, not " + command);
  }
};

Json read_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (!source.empty() && (source.front() == '{' || source.front() == '[')) {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read " + source);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

/// "U:L", e.g. "1246:3568".
LatticePathMatroid parse_lpm(const std::string& text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("expected U:L in \"" + text + "\"", 0);
  const Subset upper = parse_subset(std::string_view(text).substr(0, colon));
  const Subset lower = parse_subset(std::string_view(text).substr(colon + 1));
  return LatticePathMatroid(n, upper, lower);
}

std::string lpm_text(const LatticePathMatroid& m) {
  return "M[" + to_string(m.upper()) + "," + to_string(m.lower()) + "]";
}

std::string subsets_text(const std::vector<Subset>& sets) {
  std::string out;
  for (Subset s : sets) out += (out.empty() ? "" : " ") + to_string(s);
  return out;
}

Json subsets_json(const std::vector<Subset>& sets) {
  Json out = Json::array();
  for (Subset s : sets) out.push_back(subset_to_json(s));
  return out;
}

std::string point_text(const RationalPoint& p) {
  std::string out = "(";
  for (int i = 0; i < p.size(); ++i) out += (i ? "," : "") + to_string(p[i]);
  return out + ")";
}

void write_split_report(Context& ctx, const SplitHyperplane& h, const SplitReport& report) {
  if (ctx.wants_json()) {
    ctx.json(split_report_to_json(h, report));
    return;
  }
  Table t({"hyperplane", "verdict", "cells", "lpfm"});
  std::string cells = "-";
  std::string lpfm = "-";
  if (report.cells) {
    cells = to_string(report.cells->identity_cell) + " " + to_string(report.cells->longest_cell);
    lpfm = std::string(report.lpfm.first ? "yes" : "no") + "/" + (report.lpfm.second ? "yes" : "no");
  }
  t.add({to_string(h), to_string(report.verdict), cells, lpfm});
  ctx.text(t.str());
  if (!report.detail.empty()) ctx.text("detail: " + report.detail + "\n");
}

void write_hyperplanes(Context& ctx, const std::vector<SplitHyperplane>& hs, int n) {
  if (ctx.wants_json()) {
    Json list = Json::array();
    for (const auto& h : hs) list.push_back(hyperplane_to_json(h));
    ctx.json(Json{{"n", n}, {"count", hs.size()}, {"hyperplanes", list}});
    return;
  }
  Table t({"hyperplane", "family", "e-cell", "w-cell"});
  for (const auto& h : hs) {
    const auto tag = classify(h);
    std::string family = "-";
    if (tag) {
      family = tag->family == HyperplaneFamily::kT1 ? "T1" : tag->family == HyperplaneFamily::kT2 ? "T2" : "T3";
      family += tag->family == HyperplaneFamily::kT3 ? " r=" + std::to_string(tag->parameter)
                                                     : " j=" + std::to_string(tag->parameter);
    }
    const auto report = check_split(h);
    t.add({to_string(h), family, report.cells ? to_string(report.cells->identity_cell) : "-",
           report.cells ? to_string(report.cells->longest_cell) : "-"});
  }
  ctx.text(t.str());
}

void write_subdivision_table(Context& ctx, const Subdivision& s) {
  std::string hs;
  for (const auto& h : s.hyperplanes) hs += (hs.empty() ? "" : ", ") + to_string(h);
  ctx.text("hyperplanes: " + hs + "\n");
  Table t({"signs", "cell", "lpfm"});
  for (const auto& c : s.cells) t.add({c.signs, to_string(c.interval), c.lpfm ? "yes" : "no"});
  ctx.text(t.str());
}

void write_poset(Context& ctx, const SubdivisionPoset& poset) {
  if (ctx.format == Format::kDot) {
    ctx.text(export_poset(poset, PosetFormat::kDot));
  } else if (ctx.format == Format::kJson) {
    ctx.text(export_poset(poset, PosetFormat::kJson));
  } else {
    Table t({"id", "hyperplanes", "cells"});
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
      const auto& e = poset.elements[i];
      std::string hs;
      for (const auto& h : e.hyperplanes) hs += (hs.empty() ? "" : ", ") + to_string(h);
      std::string cells;
      for (const auto& c : e.cells) cells += (cells.empty() ? "" : " ") + to_string(c.interval);
      t.add({std::to_string(i), hs, cells});
    }
    ctx.text(t.str());
    auto ids = [](const std::vector<int>& v) {
      std::string out;
      for (int i : v) out += (out.empty() ? "" : " ") + std::to_string(i);
      return out;
    };
    ctx.text("minimal: " + ids(poset.minimal()) + "\nmaximal: " + ids(poset.maximal()) + "\n");
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << contents;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Bruhat interval polytopes, lattice path flag matroids and split subdivisions of Pi_n",
               "permsplit"};
  app.require_subcommand(1);
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  Context ctx;
  std::function<void()> action;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->fallthrough();
    return c;
  };

  // bruhat
  CLI::App* bruhat = sub(&app, "bruhat", "Bruhat order on S_n");
  bruhat->require_subcommand(1);
  std::string perm_a;
  std::string perm_b;
  {
    CLI::App* c = sub(bruhat, "leq", "Test u <= v");
    c->add_option("u", perm_a)->required();
    c->add_option("v", perm_b)->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("bruhat leq");
        const Permutation u = parse_permutation(perm_a);
        const Permutation v = parse_permutation(perm_b, u.size());
        const bool leq = bruhat_leq(u, v);
        if (ctx.wants_json()) {
          ctx.json(Json{{"u", to_string(u)}, {"v", to_string(v)}, {"leq", leq}});
        } else {
          ctx.text(to_string(u) + " <= " + to_string(v) + ": " + (leq ? "true" : "false") + "\n");
        }
      };
    });
  }
  {
    CLI::App* c = sub(bruhat, "interval", "Elements of [u, v]");
    c->add_option("u", perm_a)->required();
    c->add_option("v", perm_b)->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("bruhat interval");
        const Permutation u = parse_permutation(perm_a);
        const Permutation v = parse_permutation(perm_b, u.size());
        const auto points = bruhat_interval(u, v);
        if (ctx.wants_json()) {
          Json elements = Json::array();
          for (const auto& p : points) elements.push_back(to_string(p));
          ctx.json(Json{{"lo", to_string(u)}, {"hi", to_string(v)}, {"size", points.size()}, {"elements", elements}});
        } else {
          ctx.text(to_string(BruhatInterval(u, v)) + " has " + std::to_string(points.size()) + " elements\n");
          for (const auto& p : points) ctx.text("  " + to_string(p) + "\n");
        }
      };
    });
  }
  {
    CLI::App* c = sub(bruhat, "dual", "Dual permutation t*, or dual interval [u, v]*");
    c->add_option("u", perm_a)->required();
    c->add_option("v", perm_b);
    c->callback([&] {
      action = [&] {
        ctx.no_dot("bruhat dual");
        const Permutation u = parse_permutation(perm_a);
        if (perm_b.empty()) {
          const Permutation d = dual_permutation(u);
          if (ctx.wants_json()) {
            ctx.json(Json{{"permutation", to_string(u)}, {"dual", to_string(d)}});
          } else {
            ctx.text(to_string(u) + "* = " + to_string(d) + "\n");
          }
          return;
        }
        const BruhatInterval interval(u, parse_permutation(perm_b, u.size()));
        const BruhatInterval d = dual_interval(interval);
        if (ctx.wants_json()) {
          ctx.json(Json{{"interval", interval_to_json(interval)}, {"dual", interval_to_json(d)}});
        } else {
          ctx.text(to_string(interval) + "* = " + to_string(d) + "\n");
        }
      };
    });
  }

  // lpm
  CLI::App* lpm = sub(&app, "lpm", "Lattice path matroids M[U,L], given as U:L");
  lpm->require_subcommand(1);
  int n = 0;
  std::string lpm_a;
  std::string lpm_b;
  std::vector<int> pair;
  {
    CLI::App* c = sub(lpm, "bases", "Bases of M[U,L]");
    c->add_option("-n", n, "Ground set size")->required();
    c->add_option("lpm", lpm_a, "U:L")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("lpm bases");
        const auto m = parse_lpm(lpm_a, n);
        const auto bases = lpm_bases(m);
        if (ctx.wants_json()) {
          ctx.json(Json{{"lpm", lpm_to_json(m)}, {"count", bases.size()}, {"bases", subsets_json(bases)}});
        } else {
          ctx.text(lpm_text(m) + " has " + std::to_string(bases.size()) + " bases\n" + subsets_text(bases) + "\n");
        }
      };
    });
  }
  {
    CLI::App* c = sub(lpm, "good-pairs", "Good pairs (u, l) of M[U,L]");
    c->add_option("-n", n, "Ground set size")->required();
    c->add_option("lpm", lpm_a, "U:L")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("lpm good-pairs");
        const auto m = parse_lpm(lpm_a, n);
        const auto pairs = good_pairs(m);
        if (ctx.wants_json()) {
          Json list = Json::array();
          for (const auto& p : pairs) list.push_back(Json{{"u", p.u}, {"l", p.l}, {"j", p.j}, {"i", p.i}});
          ctx.json(Json{{"lpm", lpm_to_json(m)}, {"good_pairs", list}});
        } else {
          Table t({"u", "l", "j", "i"});
          for (const auto& p : pairs) {
            t.add({std::to_string(p.u), std::to_string(p.l), std::to_string(p.j), std::to_string(p.i)});
          }
          ctx.text(t.str());
        }
      };
    });
  }
  {
    CLI::App* c = sub(lpm, "quotient", "Elementary quotient M[U-u, L-l]");
    c->add_option("-n", n, "Ground set size")->required();
    c->add_option("lpm", lpm_a, "U:L")->required();
    c->add_option("--pair", pair, "u l")->required()->expected(2);
    c->callback([&] {
      action = [&] {
        ctx.no_dot("lpm quotient");
        const auto m = parse_lpm(lpm_a, n);
        const auto q = elementary_quotient(m, pair[0], pair[1]);
        if (ctx.wants_json()) {
          ctx.json(Json{{"lpm", lpm_to_json(m)}, {"pair", Json{{"u", pair[0]}, {"l", pair[1]}}}, {"quotient", lpm_to_json(q)}});
        } else {
          ctx.text(lpm_text(m) + " / (" + std::to_string(pair[0]) + "," + std::to_string(pair[1]) + ") = " +
                   lpm_text(q) + "\n");
        }
      };
    });
  }
  {
    CLI::App* c = sub(lpm, "chain", "Chain of elementary quotients from HIGH down to LOW");
    c->add_option("-n", n, "Ground set size")->required();
    c->add_option("low", lpm_a, "U:L")->required();
    c->add_option("high", lpm_b, "U:L")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("lpm chain");
        const auto low = parse_lpm(lpm_a, n);
        const auto high = parse_lpm(lpm_b, n);
        const auto chain = quotient_chain(low, high);
        if (ctx.wants_json()) {
          Json steps = nullptr;
          if (chain) {
            steps = Json::array();
            for (const auto& s : *chain) {
              steps.push_back(Json{{"pair", Json{{"u", s.pair.u}, {"l", s.pair.l}}}, {"result", lpm_to_json(s.result)}});
            }
          }
          ctx.json(Json{{"low", lpm_to_json(low)}, {"high", lpm_to_json(high)}, {"chain", steps}});
        } else if (!chain) {
          ctx.text(lpm_text(low) + " is not a quotient of " + lpm_text(high) + "\n");
        } else {
          std::string line = lpm_text(high);
          for (const auto& s : *chain) {
            line += " -(" + std::to_string(s.pair.u) + "," + std::to_string(s.pair.l) + ")-> " + lpm_text(s.result);
          }
          ctx.text(line + "\n");
        }
      };
    });
  }

  // matroid
  CLI::App* matroid = sub(&app, "matroid", "Matroids given by bases as JSON (inline, file, or - for stdin)");
  matroid->require_subcommand(1);
  std::string input_a;
  std::string input_b;
  std::string criterion = "all";
  auto matroid_command = [&](const std::string& name, const std::string& help,
                             std::function<void(const SetMatroid&)> body) {
    CLI::App* c = sub(matroid, name, help);
    c->add_option("matroid", input_a, "{\"n\":..,\"bases\":[..]}")->required();
    c->callback([&, name, body] {
      action = [&, name, body] {
        ctx.no_dot("matroid " + name);
        body(matroid_from_json(read_json(input_a)));
      };
    });
  };
  matroid_command("validate", "Check the basis exchange axiom", [&](const SetMatroid& m) {
    if (ctx.wants_json()) {
      ctx.json(Json{{"valid", true}, {"n", m.ground_size()}, {"rank", m.rank()}, {"bases", m.bases().size()}});
    } else {
      ctx.text("valid matroid on [" + std::to_string(m.ground_size()) + "] of rank " + std::to_string(m.rank()) +
               " with " + std::to_string(m.bases().size()) + " bases\n");
    }
  });
  matroid_command("circuits", "Minimal dependent sets", [&](const SetMatroid& m) {
    const auto sets = circuits(m);
    if (ctx.wants_json()) {
      ctx.json(Json{{"circuits", subsets_json(sets)}});
    } else {
      ctx.text(subsets_text(sets) + "\n");
    }
  });
  matroid_command("flats", "Closed sets", [&](const SetMatroid& m) {
    const auto sets = flats(m);
    if (ctx.wants_json()) {
      ctx.json(Json{{"flats", subsets_json(sets)}});
    } else {
      ctx.text(subsets_text(sets) + "\n");
    }
  });
  {
    CLI::App* c = sub(matroid, "quotient-check", "Is M a quotient of N");
    c->add_option("M", input_a)->required();
    c->add_option("N", input_b)->required();
    c->add_option("--criterion", criterion, "1 circuits, 2 flats, 3 basis exchange, or all")
        ->check(CLI::IsMember({"1", "2", "3", "all"}));
    c->callback([&] {
      action = [&] {
        ctx.no_dot("matroid quotient-check");
        const SetMatroid m = matroid_from_json(read_json(input_a));
        const SetMatroid big = matroid_from_json(read_json(input_b));
        std::vector<int> which = criterion == "all" ? std::vector<int>{1, 2, 3} : std::vector<int>{std::stoi(criterion)};
        Json verdicts = Json::object();
        Table t({"criterion", "quotient"});
        for (int k : which) {
          const bool q = is_quotient(m, big, static_cast<QuotientCriterion>(k));
          verdicts[std::to_string(k)] = q;
          t.add({std::to_string(k), q ? "true" : "false"});
        }
        if (ctx.wants_json()) {
          ctx.json(Json{{"quotient", verdicts}});
        } else {
          ctx.text(t.str());
        }
      };
    });
  }
  {
    CLI::App* c = sub(matroid, "from-matrix", "Column matroid of a rational matrix");
    c->add_option("matrix", input_a, "[[\"p/q\",..],..]")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("matroid from-matrix");
        const SetMatroid m = matroid_from_rational_matrix(matrix_from_json(read_json(input_a)));
        if (ctx.wants_json()) {
          ctx.json(matroid_to_json(m));
        } else {
          ctx.text("rank " + std::to_string(m.rank()) + ": " + subsets_text(m.bases()) + "\n");
        }
      };
    });
  }

  // flag
  CLI::App* flag = sub(&app, "flag", "Lattice path flag matroids");
  flag->require_subcommand(1);
  {
    CLI::App* c = sub(flag, "interval", "Bruhat interval of an LPFM");
    c->add_option("flag", input_a, "{\"n\":..,\"constituents\":[..]}")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("flag interval");
        const auto interval = lpfm_interval(flag_from_json(read_json(input_a)));
        if (ctx.wants_json()) {
          ctx.json(interval_to_json(interval));
        } else {
          ctx.text(to_string(interval) + "\n");
        }
      };
    });
  }
  {
    CLI::App* c = sub(flag, "polytope", "Vertices of the flag matroid polytope");
    c->add_option("flag", input_a, "{\"n\":..,\"constituents\":[..]}")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("flag polytope");
        const auto matroids = flag_from_json(read_json(input_a)).set_matroids();
        const auto points = flag_polytope_vertices(matroids);
        if (ctx.wants_json()) {
          Json list = Json::array();
          for (const auto& p : points) list.push_back(point_to_json(p));
          ctx.json(Json{{"count", points.size()}, {"vertices", list}});
        } else {
          ctx.text(std::to_string(points.size()) + " vertices\n");
          for (const auto& p : points) ctx.text("  " + point_text(p) + "\n");
        }
      };
    });
  }
  {
    CLI::App* c = sub(flag, "of-interval", "Flag matroid of the interval polytope [u, v]");
    c->add_option("u", perm_a)->required();
    c->add_option("v", perm_b)->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("flag of-interval");
        const Permutation u = parse_permutation(perm_a);
        const BruhatInterval interval(u, parse_permutation(perm_b, u.size()));
        const IntervalFlag result = flag_of_interval(interval);
        if (ctx.wants_json()) {
          Json list = Json::array();
          for (const auto& m : result.constituents) {
            Json entry = matroid_to_json(m);
            if (const auto l = is_lpm(m)) entry["lpm"] = lpm_to_json(*l);
            list.push_back(entry);
          }
          ctx.json(Json{{"interval", interval_to_json(interval)}, {"lpfm", result.lpfm}, {"constituents", list}});
        } else {
          Table t({"rank", "bases", "lpm"});
          for (const auto& m : result.constituents) {
            const auto l = is_lpm(m);
            t.add({std::to_string(m.rank()), subsets_text(m.bases()), l ? lpm_text(*l) : "-"});
          }
          ctx.text(t.str() + "lpfm: " + (result.lpfm ? "true" : "false") + "\n");
        }
      };
    });
  }

  // split
  CLI::App* split = sub(&app, "split", "Hyperplane splits x_S = a of Pi_n");
  split->require_subcommand(1);
  std::string hyperplane_text;
  bool half_integers = false;
  {
    CLI::App* c = sub(split, "check", "Classify one hyperplane");
    c->add_option("-n", n)->required();
    c->add_option("hyperplane", hyperplane_text, "x1+x2=4 or x_{1,2}=4")->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("split check");
        const auto h = parse_hyperplane(hyperplane_text, n);
        write_split_report(ctx, h, check_split(h));
      };
    });
  }
  {
    CLI::App* c = sub(split, "scan", "All good splits of Pi_n");
    c->add_option("-n", n)->required();
    c->add_flag("--half-integers", half_integers, "Also try half-integer levels");
    c->callback([&] {
      action = [&] {
        ctx.no_dot("split scan");
        write_hyperplanes(ctx, exhaustive_scan(n, half_integers ? ScanLevels::kHalfIntegers : ScanLevels::kIntegers), n);
      };
    });
  }
  {
    CLI::App* c = sub(split, "theorem", "The hyperplanes of the three families");
    c->add_option("-n", n)->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("split theorem");
        write_hyperplanes(ctx, theorem_hyperplanes(n), n);
      };
    });
  }
  {
    CLI::App* c = sub(split, "dual", "Hyperplane of the dual split");
    c->add_option("-n", n)->required();
    c->add_option("hyperplane", hyperplane_text)->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("split dual");
        const auto h = parse_hyperplane(hyperplane_text, n);
        const auto d = dual_hyperplane(h);
        if (ctx.wants_json()) {
          ctx.json(Json{{"hyperplane", hyperplane_to_json(h)}, {"dual", hyperplane_to_json(d)}});
        } else {
          ctx.text(to_string(h) + " -> " + to_string(d) + "\n");
        }
      };
    });
  }

  // poset
  CLI::App* poset = sub(&app, "poset", "Poset of split subdivisions ordered by refinement");
  poset->require_subcommand(1);
  std::vector<std::string> hyperplane_texts;
  {
    CLI::App* c = sub(poset, "build", "Build the poset for Pi_n");
    c->add_option("-n", n)->required()->check(CLI::Range(3, 5));
    c->callback([&] { action = [&] { write_poset(ctx, build_poset(n)); }; });
  }
  {
    CLI::App* c = sub(poset, "export", "Re-export a poset JSON document");
    c->add_option("poset", input_a, "poset JSON")->required();
    c->callback([&] { action = [&] { write_poset(ctx, poset_from_json(read_json(input_a))); }; });
  }
  {
    CLI::App* c = sub(poset, "subdivide", "Common refinement of several good splits");
    c->add_option("-n", n)->required();
    c->add_option("hyperplanes", hyperplane_texts)->required();
    c->callback([&] {
      action = [&] {
        ctx.no_dot("poset subdivide");
        std::vector<SplitHyperplane> hs;
        for (const auto& t : hyperplane_texts) hs.push_back(parse_hyperplane(t, n));
        const auto outcome = subdivision_from_hyperplanes(n, hs);
        if (ctx.wants_json()) {
          if (outcome.accepted()) {
            Json j = subdivision_to_json(*outcome.subdivision);
            j["accepted"] = true;
            ctx.json(j);
          } else {
            Json j{{"accepted", false}, {"reason", to_string(outcome.rejection->reason)},
                   {"signs", outcome.rejection->signs}};
            if (outcome.rejection->witness) j["witness"] = point_to_json(*outcome.rejection->witness);
            ctx.json(j);
          }
        } else if (outcome.accepted()) {
          write_subdivision_table(ctx, *outcome.subdivision);
        } else {
          ctx.text("rejected: " + to_string(outcome.rejection->reason) + " in cell " + outcome.rejection->signs +
                   (outcome.rejection->witness ? ", vertex " + point_text(*outcome.rejection->witness) : "") + "\n");
        }
      };
    });
  }

  // verify
  int verify_n = 0;
  std::uint64_t seed = 1;
  {
    CLI::App* c = sub(&app, "verify", "Run the acceptance checks (all sizes, or only -n N)");
    c->add_option("-n", verify_n, "Restrict to one ground-set size");
    c->add_option("--seed", seed, "Seed for sampled checks");
    c->callback([&] {
      action = [&] {
        ctx.no_dot("verify");
        verify::AcceptanceConfig config;
        config.seed = seed;
        if (verify_n > 0) config.only_n = verify_n;
        const auto results = verify::run_acceptance(config);
        if (ctx.wants_json()) {
          Json list = Json::array();
          for (const auto& r : results) {
            list.push_back(Json{{"criterion", r.id}, {"title", r.title},
                                {"status", r.skipped ? "skip" : r.passed ? "pass" : "fail"},
                                {"summary", r.summary}, {"notes", r.notes}});
          }
          ctx.json(Json{{"seed", seed}, {"results", list}});
        } else {
          ctx.text(verify::format_results(results));
        }
        if (!verify::all_passed(results)) throw Error("verification failed");
      };
    });
  }

  // fixtures
  std::string fixture_dir = "fixtures";
  {
    CLI::App* c = sub(&app, "fixtures", "Regenerate the golden JSON files");
    c->add_option("--dir", fixture_dir, "Output directory");
    c->callback([&] {
      action = [&] {
        ctx.no_dot("fixtures");
        std::filesystem::create_directories(fixture_dir);
        for (int k : {3, 4, 5}) {
          Json list = Json::array();
          for (const auto& h : exhaustive_scan(k)) list.push_back(split_report_to_json(h, check_split(h)));
          const auto path = std::filesystem::path(fixture_dir) / ("scan_" + std::to_string(k) + ".json");
          write_file(path, Json{{"n", k}, {"splits", list}}.dump(2) + "\n");
          ctx.text("wrote " + path.string() + "\n");
        }
        for (int k : {3, 4}) {
          const auto path = std::filesystem::path(fixture_dir) / ("poset_" + std::to_string(k) + ".json");
          write_file(path, export_poset(build_poset(k), PosetFormat::kJson));
          ctx.text("wrote " + path.string() + "\n");
        }
      };
    });
  }

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    ctx.format = format_name == "json" ? Format::kJson : format_name == "dot" ? Format::kDot : Format::kTable;
    if (action) action();
    result.out = ctx.out;
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\nRun with --help for usage.\n";
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const UsageError& e) {
    result.exit_code = 2;
    result.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.out = ctx.out;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace permsplit::cli
