#include "tropbundle/cli.hpp"

#include "tropbundle/bundle.hpp"
#include "tropbundle/bundle_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tropbundle::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
  bool json = false;
  std::string path;
  std::string other_path;
  std::string out_path;
  int m = 0;
};

std::string base_name(const std::string& path) { return fs::path(path).filename().string(); }

std::optional<Bundle> load(const std::string& path, std::ostream& err) {
  try {
    return read_bundle_file(path);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

/// Prints the violations of an invalid bundle; true when the bundle is valid.
bool check_valid(const Bundle& f, const char* command, const std::string& path, const Options& opt,
                 std::ostream& out) {
  const auto violations = validate_bundle(f);
  if (violations.empty()) return true;
  if (opt.json) {
    out << json{{"command", command}, {"file", base_name(path)}, {"ok", false}, {"violations", violations}}.dump(2)
        << '\n';
  } else {
    out << "invalid bundle " << base_name(path) << '\n';
    for (const auto& v : violations) out << v << '\n';
  }
  return false;
}

json class_json(const IndecClass& c) {
  return {{"r", c.rank}, {"d", c.degree}, {"t", to_string(c.offset)}, {"modulus", to_string(c.modulus)}};
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto f = load(opt.path, err);
  if (!f) return kUsage;
  const auto violations = validate_bundle(*f);
  if (opt.json) {
    out << json{{"command", "validate"}, {"file", base_name(opt.path)}, {"ok", violations.empty()},
                {"violations", violations}}
               .dump(2)
        << '\n';
  } else if (violations.empty()) {
    out << "ok\n";
  } else {
    for (const auto& v : violations) out << v << '\n';
  }
  return violations.empty() ? kOk : kNegative;
}

int cmd_info(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto f = load(opt.path, err);
  if (!f) return kUsage;
  if (!check_valid(*f, "info", opt.path, opt, out)) return kNegative;
  const auto classes = classify(*f);
  const auto deg = degree(*f);
  if (opt.json) {
    json list = json::array();
    for (const auto& c : classes) list.push_back(class_json(c));
    out << json{{"command", "info"}, {"file", base_name(opt.path)}, {"rank", f->rank()}, {"degree", deg},
                {"classes", list}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "command=info file=" << base_name(opt.path) << '\n';
  out << "rank=" << f->rank() << '\n';
  out << "degree=" << deg << '\n';
  for (const auto& c : classes) {
    out << "r=" << c.rank << " d=" << c.degree << " t=" << to_string(c.offset) << " mod " << to_string(c.modulus)
        << '\n';
  }
  return kOk;
}

int cmd_iso(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto f = load(opt.path, err);
  const auto g = load(opt.other_path, err);
  if (!f || !g) return kUsage;
  if (f->curve() != g->curve()) {
    err << "error: " << base_name(opt.path) << " and " << base_name(opt.other_path) << " live on different curves\n";
    return kUsage;
  }
  if (!check_valid(*f, "iso", opt.path, opt, out) || !check_valid(*g, "iso", opt.other_path, opt, out)) {
    return kNegative;
  }
  const bool iso = is_isomorphic(*f, *g);
  if (opt.json) {
    out << json{{"command", "iso"}, {"files", {base_name(opt.path), base_name(opt.other_path)}}, {"isomorphic", iso}}
               .dump(2)
        << '\n';
  } else {
    out << (iso ? "isomorphic" : "not isomorphic") << '\n';
  }
  return iso ? kOk : kNegative;
}

int cmd_section(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto f = load(opt.path, err);
  if (!f) return kUsage;
  if (!check_valid(*f, "section", opt.path, opt, out)) return kNegative;
  const Divisor d = chern1(*f, canonical_section(*f));
  if (opt.json) {
    json points = json::array();
    for (const auto& p : d.points()) points.push_back({{"position", to_string(p.position)}, {"weight", p.weight}});
    out << json{{"command", "section"}, {"file", base_name(opt.path)}, {"divisor", points},
                {"degree", divisor_degree(d)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "command=section file=" << base_name(opt.path) << '\n';
  for (const auto& p : d.points()) out << '(' << to_string(p.position) << ", " << p.weight << ")\n";
  out << "degree=" << divisor_degree(d) << '\n';
  return kOk;
}

int cmd_pullback(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.m < 1) {
    err << "error: --m must be at least 1\n";
    return kUsage;
  }
  const auto f = load(opt.path, err);
  if (!f) return kUsage;
  if (!check_valid(*f, "pullback", opt.path, opt, out)) return kNegative;
  const Bundle pulled = pull_back_cover(*f, opt.m);
  {
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << opt.out_path << '\n';
      return kUsage;
    }
    file << format_bundle(pulled);
  }
  const auto deg = degree(pulled);
  if (opt.json) {
    out << json{{"command", "pullback"}, {"file", base_name(opt.path)}, {"m", opt.m},
                {"output", base_name(opt.out_path)}, {"rank", pulled.rank()}, {"degree", deg}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "command=pullback file=" << base_name(opt.path) << " m=" << opt.m << '\n';
  out << "output=" << base_name(opt.out_path) << '\n';
  out << "rank=" << pulled.rank() << '\n';
  out << "degree=" << deg << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Vector bundles on a tropical elliptic curve", "tropbundle"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Emit the report as JSON");

  auto* validate = app.add_subcommand("validate", "Check a bundle file against the bundle axioms")->fallthrough();
  validate->add_option("file", opt.path, "Bundle file")->required();

  auto* info = app.add_subcommand("info", "Rank, degree and indecomposable classes")->fallthrough();
  info->add_option("file", opt.path, "Bundle file")->required();

  auto* iso = app.add_subcommand("iso", "Decide whether two bundles are isomorphic")->fallthrough();
  iso->add_option("file", opt.path, "First bundle file")->required();
  iso->add_option("other", opt.other_path, "Second bundle file")->required();

  auto* section = app.add_subcommand("section", "Divisor of the canonical section")->fallthrough();
  section->add_option("file", opt.path, "Bundle file")->required();

  auto* pullback = app.add_subcommand("pullback", "Pull back along the m-fold cover")->fallthrough();
  pullback->add_option("file", opt.path, "Bundle file")->required();
  pullback->add_option("-m,--m", opt.m, "Cover degree")->required();
  pullback->add_option("-o,--out", opt.out_path, "Where to write the pulled-back bundle")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(opt, out, err);
    if (*info) return cmd_info(opt, out, err);
    if (*iso) return cmd_iso(opt, out, err);
    if (*section) return cmd_section(opt, out, err);
    return cmd_pullback(opt, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tropbundle::cli
