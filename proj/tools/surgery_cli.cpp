#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reveng/abelian.hpp"
#include "reveng/coset_enum.hpp"
#include "reveng/error.hpp"
#include "reveng/int_matrix.hpp"
#include "reveng/manifold.hpp"
#include "reveng/pipeline.hpp"
#include "reveng/report_json.hpp"
#include "reveng/script.hpp"
#include "reveng/word_syntax.hpp"

namespace {

using namespace reveng;

std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

IntRange range_arg(std::string const& text, char const* what) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    IntRange r{std::stoll(text.substr(0, dots), &used), 0};
    if (used != dots) throw std::invalid_argument(text);
    r.last = std::stoll(text.substr(dots + 2), &used);
    if (used != text.size() - dots - 2) throw std::invalid_argument(text);
    if (r.last < r.first) throw std::invalid_argument(text);
    return r;
  } catch (std::logic_error const&) {
    throw InvalidArgument(std::string(what) + ": expected a..b with a <= b, got '" + text + "'");
  }
}

std::ostream* progress_stream() {
  char const* level = std::getenv("SURGERY_LOG");
  return level && std::string(level) == "debug" ? &std::cerr : nullptr;
}

int run_cmd(std::string const& path, RunOptions opts, std::string const& family, std::string const& json_path) {
  std::string const text = slurp(path);
  SurgeryScript const script = parse_script(text);
  if (!family.empty()) opts.family = range_arg(family, "--family");
  opts.progress = progress_stream();
  RunReport const report = run_pipeline(script, opts);
  std::cout << format_report(report);
  if (!json_path.empty()) {
    std::string const doc = to_json(report).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << doc;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw InvalidArgument("cannot write " + json_path);
      out << doc;
    }
  }
  return 0;
}

int snf_cmd(std::string const& path, bool witness) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  IntMatrix const a = read_matrix(in);
  SmithForm const s = smith_normal_form(a);
  std::cout << "rank " << s.rank << '\n' << "invariant factors:";
  for (std::size_t i = 0; i < s.rank; ++i) std::cout << ' ' << s.diag[i];
  std::cout << '\n' << "cokernel " << to_string(invariants_of_cokernel(a)) << '\n';
  if (witness) {
    std::cout << "D =\n";
    write_matrix(std::cout, s.diagonal_matrix());
    std::cout << "left =\n";
    write_matrix(std::cout, s.left);
    std::cout << "right =\n";
    write_matrix(std::cout, s.right);
  }
  return 0;
}

int enum_cmd(std::string const& path, std::vector<std::string> const& subgroup_words, std::size_t max_cosets) {
  PresentationFile file = parse_presentation_file(slurp(path));
  for (auto const& w : subgroup_words) file.subgroup.push_back(parse_word(w, file.presentation.alphabet()));
  EnumerationOptions opt;
  opt.max_cosets = max_cosets;
  opt.progress = progress_stream();
  opt.keep_table = false;
  auto const out = todd_coxeter(file.presentation, file.subgroup, opt);
  std::cout << to_string(out) << " defined=" << out.cosets_defined << " coincidences=" << out.coincidences << '\n';
  return 0;
}

int sym2_cmd(std::string const& range_text) {
  IntRange const r = range_arg(range_text, "sym2-table");
  if (r.first < 2) throw InvalidArgument("sym2-table: genus must be at least 2");
  std::cout << "l\te\tsigma\tb1\tb2\n";
  for (std::int64_t l = r.first; l <= r.last; ++l) {
    auto const s = model_sym2(l);
    auto const b = betti(s);
    std::cout << l << '\t' << s.euler << '\t' << s.signature << '\t' << b.b1 << '\t' << b.b2 << '\n';
  }
  return 0;
}

int fmt_cmd(std::string const& path) {
  std::cout << to_text(parse_script(slurp(path)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus surgery bookkeeping: pi_1 presentations, coset enumeration, SW basic classes"};
  app.require_subcommand(1);

  std::string script_path, family, json_path;
  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run a surgery script");
  run->add_option("script", script_path, "Path to a .srg script")->required();
  run->add_option("--max-cosets", run_opts.max_cosets, "Coset bound for Todd-Coxeter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--family", family, "Parameter range a..b for a family hole");
  run->add_option("--bound", run_opts.bound, "Coordinate bound for SW candidates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run->add_option("--threads", run_opts.threads, "Family members enumerated concurrently")->capture_default_str();
  run->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");

  std::string matrix_path;
  bool witness = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrixfile", matrix_path, "'rows cols' then the entries")->required();
  snf->add_flag("--witness", witness, "Also print D and the unimodular factors");

  std::string pres_path;
  std::vector<std::string> subgroup;
  std::size_t enum_bound = kDefaultMaxCosets;
  auto* en = app.add_subcommand("enum", "Todd-Coxeter on a presentation file");
  en->add_option("presentationfile", pres_path, "generators/relator/subgroup lines")->required();
  en->add_option("--subgroup", subgroup, "Subgroup generator word (repeatable)");
  en->add_option("--max-cosets", enum_bound, "Coset bound")->check(CLI::PositiveNumber)->capture_default_str();

  std::string sym2_range;
  auto* sym2 = app.add_subcommand("sym2-table", "Characteristic numbers of Sym^2 of a genus l surface");
  sym2->add_option("range", sym2_range, "lmin..lmax")->required();

  std::string fmt_path;
  auto* fmt = app.add_subcommand("fmt", "Print a script in canonical form");
  fmt->add_option("script", fmt_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_cmd(script_path, run_opts, family, json_path);
    if (*snf) return snf_cmd(matrix_path, witness);
    if (*en) return enum_cmd(pres_path, subgroup, enum_bound);
    if (*sym2) return sym2_cmd(sym2_range);
    if (*fmt) return fmt_cmd(fmt_path);
  } catch (InconsistentState const& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (SyntaxError const& e) {
    std::cerr << (*run ? script_path : *fmt ? fmt_path : pres_path) << ':' << e.what() << '\n';
    return 1;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
