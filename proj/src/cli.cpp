#include "nilsemi/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nilsemi/cache_file.hpp"
#include "nilsemi/counting.hpp"
#include "nilsemi/output.hpp"
#include "nilsemi/verify.hpp"

namespace nilsemi::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string valid_kinds() {
  std::string s;
  for (auto k : all_kinds()) {
    s += (s.empty() ? "" : ", ") + std::string(kind_name(k));
  }
  return s;
}

CountKind require_kind(std::string const& name) {
  if (auto k = parse_kind(name)) {
    return *k;
  }
  throw UsageError("unknown kind '" + name + "'; valid kinds: " +
                   valid_kinds());
}

OutputFormat require_format(std::string const& name) {
  if (auto f = parse_format(name)) {
    return *f;
  }
  throw UsageError("unknown format '" + name + "'; valid formats: plain, csv, "
                   "json");
}

std::vector<CountKind> require_kinds(std::string const& list) {
  std::vector<CountKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    kinds.push_back(require_kind(item));
  }
  if (kinds.empty()) {
    throw UsageError("--kinds is empty; valid kinds: " + valid_kinds());
  }
  return kinds;
}

struct Settings {
  std::string cache_path;
  bool progress = false;
  int threads = 0;
};

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact counts of nilpotent semigroups of degree 3", "nilcount"};
  app.require_subcommand(1);

  Settings settings;
  app.add_option("--cache", settings.cache_path,
                 "Persist N/L/K values to this JSON file (default: "
                 "$NILCOUNT_CACHE)");
  app.add_flag("--progress", settings.progress, "Report progress on stderr");
  app.add_option("--threads", settings.threads, "OpenMP threads (0 = default)")
      ->check(CLI::NonNegativeNumber);

  std::string kind_name_arg;
  std::string format_arg;
  bool breakdown = false;
  std::uint32_t n = 0;
  auto* count_cmd = app.add_subcommand("count", "Count for one kind and n");
  count_cmd->add_option("--kind", kind_name_arg, "Kind: " + valid_kinds())
      ->required();
  count_cmd->add_option("--n", n, "Order")->required()->check(
      CLI::PositiveNumber);
  count_cmd->add_option("--format", format_arg,
                        "plain, csv or json (default: bare value)");
  count_cmd->add_flag("--breakdown", breakdown,
                      "Include the contribution of each m = |S^2|");

  std::string kinds_arg = "equality,comm-equality,iso,iso-anti,self-dual,"
                          "comm-iso";
  std::uint32_t from = 3;
  std::uint32_t to = 15;
  std::string table_format = "plain";
  auto* table_cmd = app.add_subcommand("table", "Counts for a range of n");
  table_cmd->add_option("--kinds", kinds_arg, "Comma-separated kinds");
  table_cmd->add_option("--from", from, "First n")->check(CLI::PositiveNumber);
  table_cmd->add_option("--to", to, "Last n")->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format, "plain, csv or json");

  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::vector<std::pair<CLI::App*, OrbitFunction>> raw_cmds;
  for (auto [name, f] : {std::pair{"npq", OrbitFunction::N},
                         std::pair{"lpq", OrbitFunction::L},
                         std::pair{"kpq", OrbitFunction::K}}) {
    auto* cmd = app.add_subcommand(name, std::string("Raw orbit count ") +
                                             static_cast<char>(name[0] - 32) +
                                             "(p,q)");
    cmd->add_option("--p", p)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--q", q)->required()->check(CLI::PositiveNumber);
    raw_cmds.emplace_back(cmd, f);
  }

  std::uint32_t bound_n = 0;
  std::uint32_t bound_from = 0;
  std::uint32_t bound_to = 0;
  std::string bound_format = "plain";
  auto* bound_cmd =
      app.add_subcommand("bound", "Lower bound ceil(z(n) / 2n!)");
  auto* bound_n_opt =
      bound_cmd->add_option("--n", bound_n, "Order")->check(CLI::PositiveNumber);
  auto* bound_from_opt = bound_cmd->add_option("--from", bound_from)
                             ->check(CLI::PositiveNumber)
                             ->excludes(bound_n_opt);
  bound_cmd->add_option("--to", bound_to)
      ->check(CLI::PositiveNumber)
      ->needs(bound_from_opt);
  bound_cmd->add_option("--format", bound_format,
                        "plain, csv or json (ranges only)");

  std::uint32_t max_n = 6;
  std::uint32_t explicit_max = 5;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-check formulas against the oracle");
  verify_cmd->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--explicit-max", explicit_max)
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"nilcount"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) {
    argv.push_back(a.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "nilcount: " << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return kExitUsage;
  }

  if (settings.threads > 0) {
    omp_set_num_threads(settings.threads);
  }
  if (settings.cache_path.empty()) {
    if (char const* env = std::getenv("NILCOUNT_CACHE")) {
      settings.cache_path = env;
    }
  }

  auto& cache = default_cache();
  std::size_t cached_before = 0;
  try {
    if (!settings.cache_path.empty()) {
      auto const stats = load_cache(settings.cache_path, cache);
      if (stats.rejected > 0) {
        err << "nilcount: ignored " << stats.rejected
            << " invalid cache entries in " << settings.cache_path << "\n";
      }
      cached_before = cache.size();
    }

    auto progress_for = [&](CountKind kind,
                            std::uint32_t order) -> ProgressFn {
      if (!settings.progress) {
        return {};
      }
      return [&err, kind, order](std::uint32_t m, std::uint32_t top) {
        err << "[" << kind_name(kind) << " n=" << order << "] m=" << m << "/"
            << top << "\n";
      };
    };

    int status = kExitOk;
    if (count_cmd->parsed()) {
      auto const kind = require_kind(kind_name_arg);
      std::optional<OutputFormat> format;
      if (!format_arg.empty()) {
        format = require_format(format_arg);
      }
      auto const result = count(kind, n, progress_for(kind, n));
      if (!format) {
        out << result.value.get_str() << "\n";
        if (breakdown) {
          for (auto const& [m, v] : result.per_m) {
            out << "m=" << m << " " << v.get_str() << "\n";
          }
        }
      } else {
        out << format_output({make_record(result, breakdown)}, *format);
      }
    } else if (table_cmd->parsed()) {
      auto const kinds = require_kinds(kinds_arg);
      auto const format = require_format(table_format);
      if (from > to) {
        throw UsageError("--from must not exceed --to");
      }
      std::vector<std::string> labels;
      for (auto k : kinds) {
        labels.emplace_back(kind_name(k));
      }
      std::vector<TableRow> rows;
      for (std::uint32_t order = from; order <= to; ++order) {
        TableRow row{order, {}};
        for (auto k : kinds) {
          row.values.push_back(count(k, order, progress_for(k, order)).value);
        }
        rows.push_back(std::move(row));
      }
      out << format_table(labels, rows, format);
    } else if (bound_cmd->parsed()) {
      auto const format = require_format(bound_format);
      if (bound_n_opt->count() > 0) {
        if (bound_n < 3) {
          throw UsageError("bound needs n >= 3");
        }
        out << semigroup_lower_bound(bound_n).get_str() << "\n";
      } else if (bound_from_opt->count() > 0) {
        std::uint32_t const last = bound_to == 0 ? bound_from : bound_to;
        if (bound_from < 3 || bound_from > last) {
          throw UsageError("bound needs 3 <= --from <= --to");
        }
        std::vector<TableRow> rows;
        for (std::uint32_t order = bound_from; order <= last; ++order) {
          rows.push_back({order, {semigroup_lower_bound(order)}});
        }
        out << format_table({"lower-bound"}, rows, format);
      } else {
        throw UsageError("bound needs --n or --from/--to");
      }
    } else if (verify_cmd->parsed()) {
      auto const report = verify_range(max_n, explicit_max);
      for (auto const& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
          out << "  [" << c.detail << "]";
        }
        out << "\n";
      }
      out << report.checks.size() - report.failures() << "/"
          << report.checks.size() << " checks passed\n";
      status = report.all_passed() ? kExitOk : kExitVerifyFailed;
    } else {
      for (auto const& [cmd, f] : raw_cmds) {
        if (!cmd->parsed()) {
          continue;
        }
        if (q >= p) {
          throw UsageError("need q < p");
        }
        ExactInt value;
        switch (f) {
          case OrbitFunction::N:
            value = big_n(p, q);
            break;
          case OrbitFunction::L:
            value = big_l(p, q);
            break;
          case OrbitFunction::K:
            value = big_k(p, q);
            break;
        }
        out << value.get_str() << "\n";
      }
    }

    if (!settings.cache_path.empty() && cache.size() != cached_before) {
      save_cache(settings.cache_path, cache);
    }
    return status;
  } catch (UsageError const& e) {
    err << "nilcount: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    err << "nilcount: error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace nilsemi::cli
