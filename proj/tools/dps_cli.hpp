#ifndef DPS_TOOLS_DPS_CLI_HPP_
#define DPS_TOOLS_DPS_CLI_HPP_

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.
//
// Exit status: 0 success, 1 verification failure, 2 usage error, 3 budget
// exceeded.

#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dps/dps.hpp"

namespace dps::cli {

  enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, budget = 3 };

  namespace detail {
    using nlohmann::json;

    inline json map_json(PartialInjection const& f) {
      return json::parse(to_json(f));
    }

    inline json maps_json(std::vector<PartialInjection> const& fs) {
      json out = json::array();
      for (auto const& f : fs) {
        out.push_back(map_json(f));
      }
      return out;
    }

    inline json presentation_json(Presentation const& p) {
      json rels = json::array();
      for (auto const& r : p.relations) {
        rels.push_back({{"lhs", to_string(r.lhs, p.alphabet)},
                        {"rhs", to_string(r.rhs, p.alphabet)},
                        {"label", r.label}});
      }
      return {{"alphabet", p.alphabet},
              {"relation_count", p.relations.size()},
              {"relations", rels}};
    }

    inline json table_json(MonoidTable const& t) {
      json reps = json::array();
      for (auto const& w : t.representatives) {
        reps.push_back(to_string(w, t.alphabet));
      }
      return {{"alphabet", t.alphabet},
              {"class_count", t.class_count},
              {"action", t.right_action},
              {"representatives", reps}};
    }

    inline json report_json(RelationReport const& r) {
      json failures = json::array();
      for (auto const& f : r.failures) {
        failures.push_back({{"index", f.index},
                            {"label", f.label},
                            {"lhs", map_json(f.lhs_value)},
                            {"rhs", map_json(f.rhs_value)}});
      }
      return {{"relation_count", r.relation_count}, {"failures", failures}};
    }

    inline void write_file(std::string const& path, std::string const& text) {
      std::ofstream file(path);
      if (!file) {
        throw Error(ErrorCode::ParseError, "cannot write " + path);
      }
      file << text;
    }

    inline Presentation presentation_family(std::string const& family,
                                            std::size_t        n,
                                            std::size_t        m) {
      if (family == "dps") {
        return dps_presentation(n);
      }
      return symmetric_inverse_presentation(
          m, family == "si-b" ? SymmetricInverseVariant::b : SymmetricInverseVariant::b1);
    }
  }  // namespace detail

  inline constexpr std::size_t enumerate_limit = 9;

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::json;

    CLI::App app{"Partial isometries of star graphs: DPS_n"};
    app.name("dps");
    app.require_subcommand(1);
    app.fallthrough();

    bool        as_json    = false;
    std::string seed_order = "canonical";
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_option("--seed-order", seed_order, "Element order")
        ->check(CLI::IsMember({"canonical"}));

    std::size_t n = 0, m = 4, k = 0, max_classes = 0;
    unsigned    jobs   = 1;
    bool        table  = false, prune = false;
    std::uint64_t rank_budget = SearchOptions{}.budget;
    std::string format = "jsonl", mode = "characterized", map_text, export_path, dump_path,
                family = "dps";

    auto* count = app.add_subcommand("count", "Print |DPS_n|");
    count->add_option("--n", n, "Order of the star graph")->required()->check(CLI::Range(1, 254));
    count->add_flag("--table", table, "Print |DPS_k| for k = 1..n");

    auto* enumerate = app.add_subcommand("enumerate", "List the elements of DPS_n");
    enumerate->add_option("--n", n)->required()->check(CLI::Range(std::size_t(1), enumerate_limit));
    enumerate->add_option("--format", format)->check(CLI::IsMember({"jsonl", "json"}));

    auto* member = app.add_subcommand("member", "Test membership of a map in DPS_n");
    member->add_option("--n", n)->required()->check(CLI::Range(1, 254));
    member->add_option("--map", map_text, "JSON array, null for undefined")->required();

    auto* green = app.add_subcommand("green", "Green's relations of DPS_n");
    green->add_option("--n", n)->required()->check(CLI::Range(1, 254));
    green->add_option("--mode", mode)->check(CLI::IsMember({"characterized", "ideal"}));

    auto* rank = app.add_subcommand("rank", "Search for a generating set of size k");
    rank->add_option("--n", n)->required()->check(CLI::Range(1, 6));
    rank->add_option("--k", k)->required();
    rank->add_flag("--prune", prune, "Only try subsets meeting the rank lower-bound conditions");
    rank->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    rank->add_option("--budget", rank_budget, "Maximum number of subsets without --prune");

    auto* presentation = app.add_subcommand("presentation", "Print a presentation");
    presentation->add_option("--n", n, "n for the dps family")->check(CLI::Range(1, 254));
    presentation->add_option("--m", m, "m for the si-b / si-b1 families")->check(CLI::Range(3, 200));
    presentation->add_option("--family", family)->check(CLI::IsMember({"dps", "si-b", "si-b1"}));
    presentation->add_option("--export", export_path, "Write the text form to a file");

    auto* check = app.add_subcommand("check-relations", "Evaluate the relations on the generators");
    check->add_option("--n", n)->required()->check(CLI::Range(1, 254));

    auto* verify = app.add_subcommand("verify-presentation",
                                      "Enumerate the quotient and compare it with DPS_n");
    verify->add_option("--n", n)->required()->check(CLI::Range(1, 20));
    verify->add_option("--max-classes", max_classes, "Class budget (default $DPS_MAX_CLASSES or 100000)");
    verify->add_option("--dump-table", dump_path, "Write the quotient table as JSON");

    auto* replay = app.add_subcommand("tietze-replay",
                                      "Rewrite the (a1,a2,b) presentation of I({1..m}) into (a1,a2,b1)");
    replay->add_option("--m", m)->check(CLI::Range(3, 8));
    replay->add_option("--max-classes", max_classes);

    auto fail = [&](int code, std::string const& kind, std::string const& message) {
      if (as_json) {
        err << json{{"error", kind}, {"message", message}, {"exit", code}}.dump() << '\n';
      } else {
        err << "dps: " << message << '\n';
      }
      return code;
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      return fail(usage, "UsageError", e.what());
    }

    try {
      if (max_classes == 0) {
        max_classes = max_classes_from_env();
      }

      if (*count) {
        if (as_json) {
          json rows = json::array();
          for (std::size_t i = table ? 1 : n; i <= n; ++i) {
            rows.push_back({{"n", i}, {"count", dps_count(i).str()}});
          }
          out << (table ? rows : rows[0]).dump() << '\n';
        } else if (table) {
          for (std::size_t i = 1; i <= n; ++i) {
            out << i << ' ' << dps_count(i) << '\n';
          }
        } else {
          out << dps_count(n) << '\n';
        }
        return ok;
      }

      if (*enumerate) {
        auto const elements = enumerate_dps(n);
        if (format == "json") {
          out << detail::maps_json(elements).dump() << '\n';
        } else {
          for (auto const& f : elements) {
            out << to_json(f) << '\n';
          }
        }
        return ok;
      }

      if (*member) {
        auto const f = parse_transformation(map_text);
        if (f.degree() != n) {
          return fail(usage, "DegreeMismatch",
                      "map has degree " + std::to_string(f.degree()) + ", expected "
                          + std::to_string(n));
        }
        bool const in = is_dps_member(f);
        if (as_json) {
          out << json{{"n", n}, {"map", json::parse(to_json(f))}, {"member", in}}.dump() << '\n';
        } else {
          out << (in ? "true" : "false") << '\n';
        }
        return ok;
      }

      if (*green) {
        auto const g = green_classify(
            n, mode == "ideal" ? GreenMode::ideal_bruteforce : GreenMode::characterized);
        constexpr std::pair<char const*, GreenRelation> rels[]
            = {{"L", GreenRelation::L}, {"R", GreenRelation::R}, {"H", GreenRelation::H},
               {"D", GreenRelation::D}, {"J", GreenRelation::J}};
        if (as_json) {
          json relations = json::object();
          for (auto [name, rel] : rels) {
            auto sizes      = g.class_sizes(rel);
            relations[name] = {{"class_count", sizes.size()},
                               {"class_sizes", sizes},
                               {"class_ids", g.ids(rel)}};
          }
          out << json{{"n", n},
                      {"mode", mode},
                      {"element_count", g.elements.size()},
                      {"elements", detail::maps_json(g.elements)},
                      {"relations", relations}}
                     .dump()
              << '\n';
        } else {
          out << "DPS_" << n << ": " << g.elements.size() << " elements (" << mode << ")\n";
          for (auto [name, rel] : rels) {
            auto sizes = g.class_sizes(rel);
            out << name << ": " << sizes.size() << " classes, sizes";
            for (auto s : sizes) {
              out << ' ' << s;
            }
            out << '\n';
          }
        }
        return ok;
      }

      if (*rank) {
        auto const result = find_generating_set(n, k, prune, {rank_budget, jobs});
        if (as_json) {
          json j = {{"n", n},
                    {"k", k},
                    {"prune", prune},
                    {"found", result.witness.has_value()},
                    {"examined", result.examined}};
          if (result.witness) {
            j["witness"] = detail::maps_json(*result.witness);
          }
          out << j.dump() << '\n';
        } else if (result.witness) {
          out << "FOUND";
          for (auto const& f : *result.witness) {
            out << ' ' << to_json(f);
          }
          out << "\nexamined " << result.examined << '\n';
        } else {
          out << "NONE\nexamined " << result.examined << '\n';
        }
        return ok;
      }

      if (*presentation) {
        if (family == "dps" && n == 0) {
          return fail(usage, "UsageError", "--n is required for the dps family");
        }
        auto const p = detail::presentation_family(family, n, m);
        if (!export_path.empty()) {
          detail::write_file(export_path, to_text(p));
        }
        if (as_json) {
          out << detail::presentation_json(p).dump() << '\n';
        } else {
          out << to_text(p);
        }
        return ok;
      }

      if (*check) {
        auto const p      = dps_presentation(n);
        auto const report = check_relations(p, standard_assignment(n));
        if (as_json) {
          out << detail::report_json(report).dump() << '\n';
        } else {
          out << "relations " << report.relation_count << " failures "
              << report.failures.size() << '\n';
          for (auto const& f : report.failures) {
            out << "  #" << f.index << ' ' << f.label << ": "
                << to_string(p.relations[f.index].lhs, p.alphabet) << " -> "
                << to_json(f.lhs_value) << ", "
                << to_string(p.relations[f.index].rhs, p.alphabet) << " -> "
                << to_json(f.rhs_value) << '\n';
          }
        }
        return report.ok() ? ok : verification_failed;
      }

      if (*verify) {
        auto const v = verify_presentation_defines(n, max_classes);
        if (!dump_path.empty() && v.table.class_count > 0) {
          detail::write_file(dump_path, detail::table_json(v.table).dump() + "\n");
        }
        if (as_json) {
          out << json{{"n", n},
                      {"defined", v.defined},
                      {"class_count", v.class_count},
                      {"dps_count", v.dps_size.str()},
                      {"relations", detail::report_json(v.relations)},
                      {"detail", v.detail}}
                     .dump()
              << '\n';
        } else if (v.defined) {
          out << "DEFINED " << v.class_count << '\n';
        } else {
          out << "NOT DEFINED: " << v.detail << '\n';
        }
        return v.defined ? ok : verification_failed;
      }

      if (*replay) {
        auto const r = tietze_replay(m, {max_classes});
        if (as_json) {
          json stages = json::array();
          for (auto const& s : r.stages) {
            stages.push_back({{"step", s.description},
                              {"presentation", detail::presentation_json(s.presentation)}});
          }
          out << json{{"m", m},
                      {"stages", stages},
                      {"matches_target", r.matches_target},
                      {"start_classes", r.start_classes},
                      {"target_classes", r.target_classes}}
                     .dump()
              << '\n';
        } else {
          for (auto const& s : r.stages) {
            out << "## " << s.description << '\n' << to_text(s.presentation);
          }
          out << (r.matches_target ? "MATCH" : "MISMATCH") << ' ' << r.start_classes << ' '
              << r.target_classes << '\n';
        }
        return r.matches_target ? ok : verification_failed;
      }
    } catch (Error const& e) {
      bool const over = e.code() == ErrorCode::BudgetExceeded
                        || e.code() == ErrorCode::LimitExceeded;
      return fail(over ? budget : usage, std::string(to_string(e.code())), e.what());
    }
    return fail(usage, "UsageError", "no subcommand");
  }

}  // namespace dps::cli

#endif  // DPS_TOOLS_DPS_CLI_HPP_
