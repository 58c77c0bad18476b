// Command line front end; talks to the library exclusively through the
// public C API.  Exit codes: 0 success (or verification pass), 1 verification
// fail, 2 input failed to parse, 3 semantic error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varembed/varembed.h"

namespace {

int exit_code_for(ve_status s) {
  switch (s) {
    case VE_OK:
      return 0;
    case VE_ERR_PARSE:
    case VE_ERR_UNKNOWN_VARIABLE:
      return 2;
    default:
      return 3;
  }
}

[[noreturn]] void die(ve_status s) {
  std::fprintf(stderr, "error: %s\n", ve_last_error());
  std::exit(exit_code_for(s));
}

[[noreturn]] void die_input(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(2);
}

[[noreturn]] void die_io(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(3);
}

void check(ve_status s) {
  if (s != VE_OK) die(s);
}

std::string take_string(char* s) {
  std::string out(s);
  ve_string_free(s);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int64_t> parse_ints(const std::string& csv) {
  std::vector<int64_t> out;
  for (const std::string& part : split(csv, ',')) {
    if (part.empty()) die_input("empty integer in '" + csv + "'");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(part.c_str(), &end, 10);
    if (errno != 0 || end != part.c_str() + part.size())
      die_input("bad integer '" + part + "'");
    out.push_back(v);
  }
  return out;
}

ve_poly* parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  std::vector<const char*> ptrs;
  ptrs.reserve(vars.size());
  for (const std::string& v : vars) ptrs.push_back(v.c_str());
  ve_poly* p = nullptr;
  check(ve_poly_parse(text.c_str(), ptrs.empty() ? nullptr : ptrs.data(),
                      ptrs.size(), &p));
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die_io("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) die_io("cannot open '" + path + "' for writing");
  out << content;
  if (!out) die_io("short write to '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit: Pell solutions over polynomial rings, divisibility\n"
      "families, Diophantine-to-variety compilation, embedding witnesses and\n"
      "symbolic verification."};
  app.require_subcommand(1);

  // pell
  std::string pell_t;
  int64_t pell_n = 0;
  bool pell_z = false;
  CLI::App* pell = app.add_subcommand(
      "pell", "Solution (X_N, Y_N) of X^2 - (T^2-1)Y^2 = 1 over Q[...]");
  pell->add_option("--t", pell_t, "polynomial T")->required();
  pell->add_option("--n", pell_n, "solution index N (may be negative)")->required();
  pell->add_flag("--z", pell_z, "also print Z_N = (Y_N - N)/(T - 1)");

  // divfam
  std::size_t df_n = 0;
  std::string df_constants, df_out = "-";
  bool df_large = false;
  CLI::App* divfam = app.add_subcommand(
      "divfam", "Divisibility-certified family H_1..H_n with P_n");
  divfam->add_option("--n", df_n, "family size")->required();
  divfam->add_option("--constants", df_constants,
                     "comma-separated rationals C_1..C_n (default: C_k = 3k)");
  divfam->add_flag("--allow-large", df_large, "lift the size cap");
  divfam->add_option("--out", df_out, "output file ('-' = stdout)");

  // reduce
  std::string red_case, red_dioph, red_vars, red_out = "-";
  bool red_large = false;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Compile a Diophantine polynomial into a variety presentation");
  reduce->add_option("case", red_case, "real | complex")
      ->required()
      ->check(CLI::IsMember({"real", "complex"}));
  reduce->add_option("--dioph", red_dioph, "Diophantine polynomial Q")->required();
  reduce->add_option("--vars", red_vars, "comma-separated variables of Q")->required();
  reduce->add_flag("--allow-large", red_large, "lift the family size cap");
  reduce->add_option("--out", red_out, "output file ('-' = stdout)");

  // witness
  std::string wit_case, wit_dioph, wit_vars, wit_solution, wit_out = "-";
  bool wit_large = false;
  CLI::App* witness = app.add_subcommand(
      "witness", "Embedding witness from integer solutions of Q");
  witness->add_option("case", wit_case, "real | complex")
      ->required()
      ->check(CLI::IsMember({"real", "complex"}));
  witness->add_option("--dioph", wit_dioph, "Diophantine polynomial Q")->required();
  witness->add_option("--vars", wit_vars, "comma-separated variables of Q")->required();
  witness
      ->add_option("--solution", wit_solution,
                   "integer solution tuple '2,1' (real) or rows '1,2,3;4,5,6' "
                   "(complex)")
      ->required();
  witness->add_flag("--allow-large", wit_large, "lift the family size cap");
  witness->add_option("--out", wit_out, "output file ('-' = stdout)");

  // verify
  std::string ver_variety, ver_witness, ver_out;
  std::uint64_t ver_seed = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "Exact symbolic verification of a witness against a variety");
  verify->add_option("--variety", ver_variety, "variety JSON file")->required();
  verify->add_option("--witness", ver_witness, "witness JSON file")->required();
  verify->add_option("--seed", ver_seed, "sample-point seed");
  verify->add_option("--out", ver_out, "report JSON file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (pell->parsed()) {
    ve_poly* t = parse_poly(pell_t, {});
    ve_poly *x = nullptr, *y = nullptr;
    check(ve_pell_solution(t, pell_n, &x, &y));
    char *xs = nullptr, *ys = nullptr;
    check(ve_poly_format(x, &xs));
    check(ve_poly_format(y, &ys));
    std::printf("X = %s\nY = %s\n", xs, ys);
    ve_string_free(xs);
    ve_string_free(ys);
    if (pell_z) {
      ve_poly* z = nullptr;
      check(ve_pell_z(t, pell_n, &z));
      char* zs = nullptr;
      check(ve_poly_format(z, &zs));
      std::printf("Z = %s\n", zs);
      ve_string_free(zs);
      ve_poly_free(z);
    }
    ve_poly_free(x);
    ve_poly_free(y);
    ve_poly_free(t);
    return 0;
  }

  if (divfam->parsed()) {
    ve_divfam* fam = nullptr;
    if (df_constants.empty()) {
      check(ve_divfam_build_3k(df_n, df_large ? 1 : 0, &fam));
    } else {
      std::vector<std::string> cs = split(df_constants, ',');
      if (cs.size() != df_n)
        die_input("--constants lists " + std::to_string(cs.size()) +
                  " values but --n is " + std::to_string(df_n));
      std::vector<const char*> ptrs;
      ptrs.reserve(cs.size());
      for (const std::string& c : cs) ptrs.push_back(c.c_str());
      check(ve_divfam_build(ptrs.data(), ptrs.size(), df_large ? 1 : 0, &fam));
    }
    char* json = nullptr;
    check(ve_divfam_to_json(fam, &json));
    write_output(df_out, take_string(json));
    ve_divfam_free(fam);
    return 0;
  }

  if (reduce->parsed()) {
    ve_poly* q = parse_poly(red_dioph, split(red_vars, ','));
    ve_variety* v = nullptr;
    if (red_case == "real")
      check(ve_variety_build_real(q, &v));
    else
      check(ve_variety_build_complex(q, red_large ? 1 : 0, &v));
    char* json = nullptr;
    check(ve_variety_to_json(v, &json));
    write_output(red_out, take_string(json));
    ve_variety_free(v);
    ve_poly_free(q);
    return 0;
  }

  if (witness->parsed()) {
    std::vector<std::string> vars = split(wit_vars, ',');
    ve_poly* q = parse_poly(wit_dioph, vars);
    ve_witness* w = nullptr;
    if (wit_case == "real") {
      std::vector<int64_t> values = parse_ints(wit_solution);
      check(ve_witness_build_real(q, values.data(), values.size(), &w));
    } else {
      std::vector<int64_t> flat;
      std::size_t rows = 0;
      for (const std::string& row_text : split(wit_solution, ';')) {
        std::vector<int64_t> row = parse_ints(row_text);
        if (row.size() != vars.size())
          die_input("solution row '" + row_text + "' has " +
                    std::to_string(row.size()) + " entries, expected " +
                    std::to_string(vars.size()));
        flat.insert(flat.end(), row.begin(), row.end());
        ++rows;
      }
      check(ve_witness_build_complex(q, flat.data(), rows, vars.size(),
                                     wit_large ? 1 : 0, &w));
    }
    char* json = nullptr;
    check(ve_witness_to_json(w, &json));
    write_output(wit_out, take_string(json));
    ve_witness_free(w);
    ve_poly_free(q);
    return 0;
  }

  if (verify->parsed()) {
    ve_variety* v = nullptr;
    check(ve_variety_from_json(read_file(ver_variety).c_str(), &v));
    ve_witness* w = nullptr;
    check(ve_witness_from_json(read_file(ver_witness).c_str(), &w));
    ve_report* r = nullptr;
    check(ve_verify(v, w, ver_seed, &r));
    char* json = nullptr;
    check(ve_report_to_json(r, &json));
    std::string report = take_string(json);
    const int pass = ve_report_pass(r);
    if (!ver_out.empty()) write_output(ver_out, report);
    if (ver_out != "-") std::printf("%s\n", pass ? "PASS" : "FAIL");
    ve_report_free(r);
    ve_witness_free(w);
    ve_variety_free(v);
    return pass ? 0 : 1;
  }

  return 0;
}
