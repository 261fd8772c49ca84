#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "soakit/construct.hpp"
#include "soakit/embed.hpp"
#include "soakit/error.hpp"
#include "soakit/fixtures.hpp"
#include "soakit/io.hpp"
#include "soakit/nets.hpp"
#include "soakit/strength3.hpp"
#include "soakit/verify.hpp"

namespace soakit::cli {
namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  ArrayFile load(const std::string& path) const {
    if (path != "-") return read_array_file(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_array(buf.str());
  }

  int verdict(const VerificationReport& r, const std::string& what) const {
    if (r.passed()) {
      out << what << ": passed\n";
      return kPassed;
    }
    out << what << ": failed\n";
    err << "witness: " << to_string(*r.witness()) << '\n';
    return kFailed;
  }
};

ArrayFile soa_file(Array a, int base, const std::string& source) {
  return ArrayFile{std::move(a), 3, ArrayFile::SoaMeta{base, 3}, source};
}

int power_of(int levels, int base) {
  int t = 0;
  long long v = 1;
  while (v < levels) {
    v *= base;
    ++t;
  }
  if (v != levels) throw ParameterError(std::to_string(levels) + " levels is not a power of " + std::to_string(base));
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Construct and verify strong orthogonal arrays of strength three", "soakit"};
  app.require_subcommand(1);

  std::string file, file2, mode, name;
  int strength = 0, base = 0, column = 0, s = 0, k = 0, w = 0, kres = 0;
  bool extended = false;
  std::uint64_t seed = 0;

  std::function<int()> action;

  auto* voa = app.add_subcommand("verify-oa", "Check orthogonal array strength");
  voa->add_option("file", file)->required();
  voa->add_option("--strength,-t", strength)->required();
  voa->callback([&] {
    action = [&] {
      return ctx.verdict(verify_oa(ctx.load(file).array, static_cast<std::size_t>(strength)),
                         "OA strength " + std::to_string(strength));
    };
  });

  auto* vsoa = app.add_subcommand("verify-soa", "Check strong orthogonal array conditions");
  vsoa->add_option("file", file)->required();
  vsoa->add_option("--base,-s", base)->required();
  vsoa->add_option("--strength,-t", strength)->required();
  vsoa->callback([&] {
    action = [&] {
      return ctx.verdict(verify_soa(ctx.load(file).array, {base, strength}),
                         "SOA base " + std::to_string(base) + " strength " + std::to_string(strength));
    };
  });

  auto* vgoa = app.add_subcommand("verify-goa", "Check a grouped array (columns a1 b1 c1 a2 ...)");
  vgoa->add_option("file", file)->required();
  vgoa->add_option("--base,-s", base)->required();
  vgoa->callback([&] {
    action = [&] {
      const auto g = GroupedArray::unflatten(ctx.load(file).array);
      if (g.levels != base) throw ParameterError("file levels do not match --base");
      return ctx.verdict(verify_goa(g), "GOA base " + std::to_string(base));
    };
  });

  auto* conv = app.add_subcommand("convert", "Convert between SOA and grouped form");
  conv->add_option("mode", mode)->required()->check(CLI::IsMember({"soa-to-goa", "goa-to-soa"}));
  conv->add_option("file", file)->required();
  conv->add_option("--base,-s", base)->required();
  conv->callback([&] {
    action = [&] {
      const auto src = ctx.load(file);
      if (mode == "soa-to-goa") {
        ctx.out << emit_array(ArrayFile{soa_to_goa(src.array, base).flatten(), 3, std::nullopt, src.source});
      } else {
        const auto g = GroupedArray::unflatten(src.array);
        if (g.levels != base) throw ParameterError("file levels do not match --base");
        ctx.out << emit_array(soa_file(goa_to_soa(g), base, src.source.value_or("goa-to-soa")));
      }
      return int{kPassed};
    };
  });

  auto* extract = app.add_subcommand("extract-oa", "Collapse an s^3-level array to its s-level OA");
  extract->add_option("file", file)->required();
  extract->add_option("--base,-s", base)->required();
  extract->callback([&] {
    action = [&] {
      const auto src = ctx.load(file);
      ctx.out << emit_array(ArrayFile{extract_underlying_oa(src.array, base), 3, std::nullopt, src.source});
      return int{kPassed};
    };
  });

  auto* br = app.add_subcommand("branch", "Print the children from branching one column");
  br->add_option("file", file)->required();
  br->add_option("--column,-c", column)->required();
  br->add_option("--strength,-t", strength)->required();
  br->callback([&] {
    action = [&] {
      const auto children = branch(ctx.load(file).array, static_cast<std::size_t>(column), strength);
      for (const auto& child : children) {
        ctx.out << "# child column " << child.parent_column << " level " << child.branch_level << " rows";
        for (auto r : child.rows) ctx.out << ' ' << r;
        ctx.out << '\n' << emit_array(ArrayFile{child.array, strength - 1, std::nullopt, std::nullopt});
      }
      return int{kPassed};
    };
  });

  auto* emb = app.add_subcommand("embed", "Search for one more column keeping the strength");
  emb->add_option("file", file)->required();
  emb->add_option("--strength,-t", strength)->required();
  emb->callback([&] {
    action = [&] {
      const auto report = find_extension(ctx.load(file).array, strength);
      ctx.err << "search nodes: " << report.search_nodes << '\n';
      if (!report.embeddable()) {
        ctx.out << "none\n";
        return int{kFailed};
      }
      for (std::size_t i = 0; i < report.extension->size(); ++i) ctx.out << (i ? " " : "") << (*report.extension)[i];
      ctx.out << '\n';
      return int{kPassed};
    };
  });

  auto* semi = app.add_subcommand("semi-embed", "Decide whether every child is embeddable");
  semi->add_option("file", file)->required();
  semi->add_option("--strength,-t", strength)->required();
  semi->callback([&] {
    action = [&] {
      const auto report = is_semi_embeddable(ctx.load(file).array, strength);
      if (report.semi_embeddable) {
        ctx.out << "semi-embeddable (" << report.per_child.size() << " children embeddable)\n";
        return int{kPassed};
      }
      ctx.out << "not semi-embeddable\n";
      if (report.short_circuit) {
        ctx.err << "decided without search: " << to_string(*report.short_circuit) << " rule\n";
      } else {
        const auto& bad = report.per_child.back();
        ctx.err << "child (column " << bad.column << ", level " << bad.level << ") has no extension\n";
      }
      return int{kFailed};
    };
  });

  auto* build = app.add_subcommand("build-soa", "Build an SOA(n, m, s^3, 3) from an OA");
  build->add_option("mode", mode)->required()->check(CLI::IsMember({"from-embeddable", "from-semi"}));
  build->add_option("file", file)->required();
  build->add_option("--base,-s", base)->required();
  build->callback([&] {
    action = [&] {
      const auto src = ctx.load(file);
      if (src.array.symmetric_levels() != base) throw ParameterError("file levels do not match --base");
      auto [soa, trace] = mode == "from-embeddable" ? soa_from_embeddable(src.array) : soa_from_semi_embeddable(src.array);
      ctx.out << emit_array(soa_file(std::move(soa), base, mode));
      return int{kPassed};
    };
  });

  auto* cons = app.add_subcommand("construct", "Classical finite-field constructions");
  cons->require_subcommand(1);
  auto* cbush = cons->add_subcommand("bush", "OA(s^3, s+1, s, 3), or s+2 columns with --extended");
  cbush->add_option("--levels,-s", s)->required();
  cbush->add_flag("--extended", extended);
  cbush->callback([&] {
    action = [&] {
      ctx.out << emit_array(ArrayFile{bush(s, extended), 3, std::nullopt, extended ? "bush extended" : "bush"});
      return int{kPassed};
    };
  });
  auto* crh = cons->add_subcommand("rao-hamming", "Saturated OA(s^k, (s^k-1)/(s-1), s, 2)");
  crh->add_option("--levels,-s", s)->required();
  crh->add_option("--dimension,-k", k)->required();
  crh->callback([&] {
    action = [&] {
      ctx.out << emit_array(ArrayFile{rao_hamming(s, k), 2, std::nullopt, "rao-hamming"});
      return int{kPassed};
    };
  });
  auto* cov = cons->add_subcommand("ovoid", "OA(s^4, s^2+1, s, 3) from an elliptic quadric");
  cov->add_option("--levels,-s", s)->required();
  cov->callback([&] {
    action = [&] {
      ctx.out << emit_array(ArrayFile{ovoid_oa(s), 3, std::nullopt, "ovoid"});
      return int{kPassed};
    };
  });
  auto* cjux = cons->add_subcommand("juxtapose", "Stack two arrays");
  cjux->add_option("first", file)->required();
  cjux->add_option("second", file2)->required();
  cjux->callback([&] {
    action = [&] {
      const auto a = ctx.load(file);
      const auto b = ctx.load(file2);
      ctx.out << emit_array(ArrayFile{juxtapose(a.array, b.array), std::min(a.strength, b.strength), std::nullopt, "juxtapose"});
      return int{kPassed};
    };
  });

  auto* net = app.add_subcommand("net-check", "Check the (w, k, m)-net property of an SOA's points");
  net->add_option("file", file)->required();
  net->add_option("--base,-s", base)->required();
  net->add_option("-w", w)->required();
  net->add_option("-k", kres)->required();
  net->callback([&] {
    action = [&] {
      const auto src = ctx.load(file);
      const auto lv = src.array.symmetric_levels();
      if (!lv) throw ParameterError("net check needs symmetric levels");
      const auto digits = soa_to_digits(src.array, base, power_of(*lv, base));
      return ctx.verdict(verify_net(digits, w, kres), "(" + std::to_string(w) + "," + std::to_string(kres) + "," +
                                                          std::to_string(src.array.factors()) + ")-net in base " +
                                                          std::to_string(base));
    };
  });

  auto* lhd = app.add_subcommand("lhd", "OA-based Latin hypercube");
  lhd->add_option("file", file)->required();
  lhd->add_option("--seed", seed)->required();
  lhd->callback([&] {
    action = [&] {
      ctx.out << emit_array(ArrayFile{latin_hypercube(ctx.load(file).array, seed), 1, std::nullopt,
                                      "lhd seed " + std::to_string(seed)});
      return int{kPassed};
    };
  });

  auto* fx = app.add_subcommand("fixtures", "Built-in reference arrays");
  fx->add_option("mode", mode)->required()->check(CLI::IsMember({"list", "show"}));
  fx->add_option("name", name);
  fx->callback([&] {
    action = [&] {
      if (mode == "list") {
        for (const auto& f : fixtures()) ctx.out << f.name << "  " << f.description << '\n';
        return int{kPassed};
      }
      if (name.empty()) throw ParameterError("fixtures show needs a name");
      ctx.out << emit_array(fixture(name).file);
      return int{kPassed};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPassed;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPassed;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  if (!action) {
    err << "usage error: no command\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace soakit::cli
