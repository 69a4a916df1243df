#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_commands.hpp"

using namespace dickson;
using namespace dickson::cli;

int main(int argc, char** argv) {
  CLI::App app{"Dickson polynomials of the (k+1)-th kind: evaluation, moments, orthogonality and Stieltjes transforms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  double tol = 1e-8;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tol, "Tolerance for gram");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate D_{n,k}(x;a)");
  eval_cmd->add_option("--n", eval.n)->required();
  eval_cmd->add_option("--k", eval.k);
  eval_cmd->add_option("--a", eval.a);
  eval_cmd->add_option("--x-re", eval.x_re);
  eval_cmd->add_option("--x-im", eval.x_im);
  eval_cmd->add_option("--method", eval.method)
      ->check(CLI::IsMember({"all", "direct", "recurrence", "closed", "hyper", "parity"}));

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficients of D_{n,k}(x;a)");
  coeffs_cmd->add_option("--n", coeffs.n)->required();
  coeffs_cmd->add_option("--k", coeffs.k);
  coeffs_cmd->add_option("--a", coeffs.a);

  MomentsArgs moments;
  auto* moments_cmd = app.add_subcommand("moments", "Moments of L_k");
  moments_cmd->add_option("--k", moments.k);
  moments_cmd->add_option("--a", moments.a);
  moments_cmd->add_option("--min-order", moments.min_order);
  moments_cmd->add_option("--max-order", moments.max_order);
  moments_cmd->add_option("--method", moments.method)->check(CLI::IsMember({"closed", "recurrence", "both"}));

  GramArgs gram;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix L_k[D_n D_m]");
  gram_cmd->add_option("--k", gram.k);
  gram_cmd->add_option("--a", gram.a);
  gram_cmd->add_option("--nmax", gram.nmax);

  ZerosArgs zeros;
  auto* zeros_cmd = app.add_subcommand("zeros", "Zeros of D_{n,k}(x;a)");
  zeros_cmd->add_option("--n", zeros.n)->required();
  zeros_cmd->add_option("--k", zeros.k);
  zeros_cmd->add_option("--a", zeros.a);
  zeros_cmd->add_option("--mode", zeros.mode)->check(CLI::IsMember({"closed", "numeric"}));

  StieltjesArgs st;
  auto* st_cmd = app.add_subcommand("stieltjes", "Stieltjes transform S(z;k,a)");
  st_cmd->add_option("--k", st.k);
  st_cmd->add_option("--a", st.a);
  st_cmd->add_option("--z-re", st.z_re);
  st_cmd->add_option("--z-im", st.z_im);

  std::string suite = "fast";
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "fast"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kDomainError;
  }
  const Format format = format_name == "csv" ? Format::csv : Format::json;

  try {
    CommandOutput out;
    if (eval_cmd->parsed()) {
      out = cmd_eval(eval);
    } else if (coeffs_cmd->parsed()) {
      out = cmd_coeffs(coeffs);
    } else if (moments_cmd->parsed()) {
      out = cmd_moments(moments);
    } else if (gram_cmd->parsed()) {
      gram.tol = tol;
      out = cmd_gram(gram);
    } else if (zeros_cmd->parsed()) {
      out = cmd_zeros(zeros);
    } else if (st_cmd->parsed()) {
      out = cmd_stieltjes(st);
    } else {
      out = cmd_verify(suite);
    }
    std::cout << render(out, format);
    return out.exit_code;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  }
}
