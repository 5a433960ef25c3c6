#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dvb/jsonio.hpp"
#include "dvb/suites.hpp"

using dvb::Dims;
using dvb::Error;
using dvb::ErrorKind;
using dvb::Rat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct CommonFlags {
  std::string dims = "2,2,2";
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string scalar = "rational";
  std::string input;
  std::string output;
};

Dims parse_dims(const std::string& text) {
  std::size_t parts[3];
  std::istringstream in(text);
  for (int i = 0; i < 3; ++i) {
    std::string tok;
    if (!std::getline(in, tok, ',')) throw Error(ErrorKind::InputError, "--dims wants n1,n2,n0");
    try {
      parts[i] = std::stoul(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InputError, "--dims component '" + tok + "' is not a count");
    }
  }
  std::string extra;
  if (std::getline(in, extra, ','))
    throw Error(ErrorKind::InputError, "--dims wants exactly three components");
  return {parts[0], parts[1], parts[2]};
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputError, "cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InputError, std::string("input is not valid JSON: ") + e.what());
  }
}

/// Complete document in, then a single write: no partial JSON on any path.
int emit(const json& doc, const std::string& output_path, int code) {
  const std::string text = doc.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "{\"error\": \"InputError\", \"detail\": \"cannot open output file\"}\n";
      return kExitInput;
    }
    out << text;
  }
  return code;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::InputError, std::string("input needs a '") + key + "' field");
  return j.at(key);
}

template <typename S>
json compute_typed(const std::string& op, const json& in, double tol) {
  namespace io = dvb::jsonio;
  if (op == "compose") {
    auto a = io::aut_in<S>(field(in, "a"));
    auto b = io::aut_in<S>(field(in, "b"));
    return io::aut_out(dvb::aut_compose(a, b));
  }
  if (op == "inverse") return io::aut_out(dvb::aut_inverse(io::aut_in<S>(field(in, "a"))));
  if (op == "bracket") {
    auto x = io::der_in<S>(field(in, "x"));
    auto y = io::der_in<S>(field(in, "y"));
    return io::der_out(dvb::der_bracket(x, y));
  }
  if (op == "fdual") return io::aut_out(dvb::f_dual(io::aut_in<S>(field(in, "a"))));
  if (op == "dualrep") return io::aut_out(dvb::dual_rep(io::aut_in<S>(field(in, "g"))));
  if (op == "pair") {
    auto v = io::element_in<S>(field(in, "v"));
    auto w = io::element_in<S>(field(in, "w"));
    return io::scalar_out(dvb::pairing(v, w));
  }
  if (op == "frame-eval") {
    auto f = io::frame_in<S>(field(in, "frame"));
    auto xi = io::element_in<S>(field(in, "xi"));
    return io::element_out(dvb::frame_eval(f, xi));
  }
  if (op == "frame-transition") {
    auto f = io::frame_in<S>(field(in, "f"));
    auto g = io::frame_in<S>(field(in, "g"));
    return io::aut_out(dvb::frame_transition(f, g));
  }
  if (op == "transport") {
    auto pc = io::bundle_in<S>(field(in, "bundle"));
    auto e = io::assoc_in<S>(field(in, "element"));
    dvb::RepKind kind = dvb::RepKind::Defining;
    if (in.contains("representation")) {
      std::string r = field(in, "representation").template get<std::string>();
      if (r == "dual")
        kind = dvb::RepKind::Dual;
      else if (r != "defining")
        throw Error(ErrorKind::InputError, "representation must be 'defining' or 'dual'");
    }
    std::vector<std::size_t> path;
    for (const auto& step : field(in, "path")) {
      if (!step.is_number_unsigned()) throw Error(ErrorKind::InputError, "path steps are charts");
      path.push_back(step.template get<std::size_t>());
    }
    dvb::RepSpec<S> rep{kind, pc.group.dims};
    return io::assoc_out(dvb::transport(pc, rep, e, path));
  }
  if (op == "exp") {
    if constexpr (std::is_same_v<S, double>) {
      return io::aut_out(dvb::der_exp(io::der_in<double>(field(in, "x")), tol));
    } else {
      throw Error(ErrorKind::InputError, "exp needs --scalar float");
    }
  }
  throw Error(ErrorKind::InputError, "unknown compute op '" + op + "'");
}

json compute_dla_build(const json& in) {
  namespace io = dvb::jsonio;
  dvb::LieAlgebra g1 = io::lie_algebra_in(field(in, "g1"));
  dvb::LieAlgebra g2 = io::lie_algebra_in(field(in, "g2"));
  dvb::LieModule r1 = io::lie_module_in(field(in, "r1"));
  dvb::LieModule r2 = io::lie_module_in(field(in, "r2"));
  dvb::Cochain w = io::cochain_in(field(in, "omega"));
  return io::double_algebra_out(dvb::build_double_algebra(g1, g2, r1, r2, w));
}

int run_suite_command(const std::string& name, const CommonFlags& flags) {
  dvb::SuiteConfig cfg;
  cfg.suite = name;
  cfg.dims = parse_dims(flags.dims);
  cfg.trials = flags.trials;
  cfg.seed = flags.seed;
  cfg.tol = flags.tol;
  if (!flags.input.empty()) {
    cfg.fixture = load_input(flags.input);
    cfg.fixture_name = flags.input;
  }
  dvb::SuiteReport report = dvb::run_suite(cfg);
  return emit(dvb::suite_report_json(report), flags.output,
              report.all_pass() ? kExitOk : kExitFail);
}

int run_compute_command(const std::string& op, const CommonFlags& flags) {
  if (flags.input.empty()) throw Error(ErrorKind::InputError, "compute needs --input FILE");
  if (flags.scalar != "rational" && flags.scalar != "float")
    throw Error(ErrorKind::InputError, "--scalar must be 'rational' or 'float'");
  json in = load_input(flags.input);
  json out;
  if (op == "dla-build") {
    out = compute_dla_build(in);
  } else if (flags.scalar == "float" || op == "exp") {
    out = compute_typed<double>(op, in, flags.tol);
  } else {
    out = compute_typed<Rat>(op, in, flags.tol);
  }
  return emit(out, flags.output, kExitOk);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification tool for double vector space structures"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string suite_name;
  std::string compute_op;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--dims", flags.dims, "fixture dimensions n1,n2,n0");
    cmd->add_option("--trials", flags.trials, "random trials per property");
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--tol", flags.tol, "float tolerance");
    cmd->add_option("--scalar", flags.scalar, "scalar field: rational or float");
    cmd->add_option("--input", flags.input, "JSON input file");
    cmd->add_option("--output", flags.output, "write the JSON result here instead of stdout");
  };

  CLI::App* suite = app.add_subcommand("suite", "run a named property suite");
  suite->add_option("name", suite_name, "one of: aut dual frames algebra bundles dla connections")
      ->required();
  add_common(suite);

  CLI::App* compute = app.add_subcommand("compute", "run one operation on a JSON input");
  compute
      ->add_option("op", compute_op,
                   "one of: compose inverse exp bracket fdual dualrep pair frame-eval "
                   "frame-transition transport dla-build")
      ->required();
  add_common(compute);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (suite->parsed()) return run_suite_command(suite_name, flags);
    return run_compute_command(compute_op, flags);
  } catch (const Error& e) {
    json err{{"error", dvb::error_kind_name(e.kind())}, {"detail", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return e.kind() == ErrorKind::InputError ? kExitInput : kExitFail;
  } catch (const std::exception& e) {
    json err{{"error", "InputError"}, {"detail", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return kExitInput;
  }
}
