#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "artinian/binomial.hpp"
#include "artinian/constructor.hpp"
#include "artinian/error.hpp"
#include "artinian/inverse_system.hpp"
#include "artinian/socle_bounds.hpp"

namespace artinian::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson num(const Integer& x) { return x.fits_slong_p() ? ojson(x.get_si()) : ojson(x.get_str()); }

ojson vec(const std::vector<Integer>& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

ojson input_json(const SocleData& d) { return {{"r", d.r}, {"s", vec(d.s)}}; }

SocleData parse_socle(int r, const std::string& text) {
  SocleData d{r, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::kInvalidInput, "empty entry in socle vector");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::kInvalidInput, "socle entry '" + item + "' is not a non-negative integer");
    d.s.emplace_back(item);
  }
  if (!text.empty() && text.back() == ',') throw Error(ErrorCode::kInvalidInput, "trailing comma in socle vector");
  d.validate();
  return d;
}

long default_coefficient_bound() {
  if (const char* env = std::getenv("ARTINIAN_COEFF_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return v;
  }
  return kDefaultCoefficientBound;
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  out << body;
}

std::string module_document(const InverseSystemModule& M) { return to_json(M).dump(2) + "\n"; }

struct Options {
  std::string format = "text";
  int r = 0;
  std::string s;
  int e = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  int search = 0;
  int max_retries = kDefaultResampleLimit;
  long coeff_bound = kDefaultCoefficientBound;
  std::string module_path;
};

ojson cmd_bound(const Options& o, ojson& input) {
  const auto d = parse_socle(o.r, o.s);
  input = input_json(d);
  const auto co = bounds_coincide(d);
  return {{"r_numbers", vec(r_numbers(d))},
          {"b", critical_degree_b(d)},
          {"fl_bound", vec(fl_bound(d))},
          {"thm_a_bound", vec(thm_a_bound(d))},
          {"coincide", co.entrywise_equal},
          {"coincidence",
           {{"low_socle_zero", co.low_socle_zero},
            {"threshold", num(co.threshold)},
            {"within_threshold", co.within_threshold},
            {"predicate", co.predicate}}}};
}

ojson cmd_classify(const Options& o, ojson& input) {
  const auto d = parse_socle(o.r, o.s);
  input = input_json(d);
  const auto rep = classify(d);
  ojson applicable = ojson::array();
  for (auto v : rep.applicable) applicable.push_back(to_string(v));
  ojson witness = nullptr;
  if (rep.refutation) {
    ojson forced = ojson::array();
    for (bool f : rep.refutation->forced) forced.push_back(f);
    witness = {{"sequence", vec(rep.refutation->sequence)},
               {"forced", forced},
               {"pivot", rep.refutation->pivot},
               {"reason", rep.refutation->reason}};
  }
  return {{"verdict", to_string(rep.verdict)},
          {"applicable", applicable},
          {"b", rep.b},
          {"c", rep.c},
          {"t", rep.t},
          {"fl_bound", vec(rep.fl_bound)},
          {"thm_a_bound", vec(rep.thm_a_bound)},
          {"coincide", rep.coincidence.entrywise_equal},
          {"witness", witness},
          {"notes", rep.notes}};
}

ojson cmd_construct(const Options& o, ojson& input) {
  const auto d = parse_socle(o.r, o.s);
  input = input_json(d);
  if (o.search > 0) {
    const auto ev = random_search(d, o.seed, o.search, o.coeff_bound);
    ojson outputs = {{"mode", "search"},
                     {"certifying", false},
                     {"attempts", ev.attempts},
                     {"socle_matches", ev.socle_matches},
                     {"best_h", ev.best_module ? vec(ev.best_h) : ojson(nullptr)},
                     {"matches_bound", ev.matches_bound},
                     {"seed", o.seed}};
    if (ev.best_module) {
      if (!o.out_path.empty()) {
        write_file(o.out_path, module_document(*ev.best_module));
        outputs["module_path"] = o.out_path;
      } else {
        outputs["module"] = to_json(*ev.best_module);
      }
    }
    return outputs;
  }

  const auto rep = classify(d);
  if (!is_admissible(rep.verdict))
    throw Error(ErrorCode::kNotAdmissible, "verdict " + std::string(to_string(rep.verdict)));
  const auto cert = certified_construct(d, o.seed, o.max_retries, o.coeff_bound);
  ojson outputs = {{"mode", "certified"}, {"certificate", to_json(cert)}};
  if (!o.out_path.empty()) {
    write_file(o.out_path, module_document(cert.module));
    outputs["module_path"] = o.out_path;
  } else {
    outputs["module"] = to_json(cert.module);
  }
  return outputs;
}

ojson cmd_verify(const Options& o, ojson& input) {
  input = {{"module", o.module_path}};
  ojson doc;
  try {
    doc = ojson::parse(read_file(o.module_path));
  } catch (const ojson::parse_error& err) {
    throw Error(ErrorCode::kParse, std::string("$: ") + err.what());
  }
  const auto M = module_from_json(doc);
  const auto prof = graded_profile(M);
  return {{"num_vars", M.num_vars()},
          {"generators", M.generators().size()},
          {"top_degree", M.top_degree()},
          {"h", vec(prof.h)},
          {"socle", vec(prof.socle)}};
}

ojson cmd_oracle(const Options& o, ojson& input) {
  input = {{"r", o.r}, {"e", o.e}};
  if (o.r < 1 || o.r > 3 || o.e < 0 || o.e > 4)
    throw Error(ErrorCode::kInvalidInput, "oracle is limited to 1 <= r <= 3 and 0 <= e <= 4");
  const auto enumerated = enumerate_hilbert_functions(o.r, o.e);
  const auto accepted = o_sequences_up_to(o.r, o.e);
  ojson functions = ojson::array();
  for (const auto& h : enumerated) functions.push_back(to_tuple(h));
  return {{"enumerated", enumerated.size()},
          {"o_sequences", accepted.size()},
          {"equal", enumerated == accepted},
          {"functions", functions}};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
    case ErrorCode::kNegativeRemainder:
    case ErrorCode::kParse:
      return kExitInput;
    case ErrorCode::kNotAdmissible:
      return kExitNotAdmissible;
    case ErrorCode::kDegeneracyLimit:
      return kExitDegeneracy;
    default:
      return kExitInternal;
  }
}

void render(const ojson& node, const std::string& indent, std::ostream& os);

bool is_numeric_vector(const ojson& node) {
  if (!node.is_array()) return false;
  for (const auto& x : node)
    if (!x.is_number() && !x.is_string()) return false;
  return true;
}

std::string scalar(const ojson& node) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_null()) return "-";
  return node.dump();
}

void render(const ojson& node, const std::string& indent, std::ostream& os) {
  for (const auto& [key, value] : node.items()) {
    os << indent << key << ":";
    if (value.is_object()) {
      os << "\n";
      render(value, indent + "  ", os);
    } else if (is_numeric_vector(value) && !value.empty() && !value.front().is_string()) {
      os << " (";
      for (std::size_t i = 0; i < value.size(); ++i) os << (i ? "," : "") << scalar(value[i]);
      os << ")\n";
    } else if (value.is_array()) {
      if (value.empty()) {
        os << " -\n";
        continue;
      }
      os << "\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << indent << "  -\n";
          render(item, indent + "    ", os);
        } else {
          os << indent << "  - " << scalar(item) << "\n";
        }
      }
    } else {
      os << " " << scalar(value) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const ojson& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Socle-vector bounds and certified inverse-system constructions", "artinian"};
  app.require_subcommand(1);
  Options o;
  o.coeff_bound = default_coefficient_bound();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_socle = [&](CLI::App* sub) {
    sub->add_option("-r,--r", o.r, "Embedding dimension r")->required();
    sub->add_option("-s,--socle", o.s, "Socle vector, comma-separated, starting with s_0 = 0")->required();
  };

  auto* bound = app.add_subcommand("bound", "Upper bounds for the h-vector of (r, s)");
  add_socle(bound);
  add_format(bound);

  auto* cls = app.add_subcommand("classify", "Admissibility verdict for the bound of (r, s)");
  add_socle(cls);
  add_format(cls);

  auto* con = app.add_subcommand("construct", "Build and certify an inverse system reaching the bound");
  add_socle(con);
  add_format(con);
  con->add_option("--seed", o.seed, "Seed for all random draws");
  con->add_option("-o,--out", o.out_path, "Write the module document to this path");
  con->add_option("--search", o.search, "Non-certifying random search with this many attempts")
      ->check(CLI::NonNegativeNumber);
  con->add_option("--max-retries", o.max_retries, "Certification redraw budget")->check(CLI::NonNegativeNumber);
  con->add_option("--coeff-bound", o.coeff_bound, "Integer box for random coefficients")
      ->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Recompute h-vector and socle of a module document");
  ver->add_option("module", o.module_path, "Module document path ('-' for stdin)")->required();
  add_format(ver);

  auto* ora = app.add_subcommand("oracle", "Cross-check monomial enumeration against the O-sequence test");
  ora->add_option("-r,--r", o.r, "Number of variables (1..3)")->required();
  ora->add_option("-e,--e", o.e, "Maximal degree (0..4)")->required();
  add_format(ora);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  ojson input = nullptr;
  ojson outputs;
  try {
    if (chosen == bound) outputs = cmd_bound(o, input);
    else if (chosen == cls) outputs = cmd_classify(o, input);
    else if (chosen == con) outputs = cmd_construct(o, input);
    else if (chosen == ver) outputs = cmd_verify(o, input);
    else outputs = cmd_oracle(o, input);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  ojson report = {{"schema_version", kSchemaVersion},
                  {"command", command},
                  {"input", input},
                  {"outputs", outputs},
                  {"timing_ms", ms}};
  if (o.format == "json")
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
  return kExitOk;
}

}  // namespace artinian::cli
