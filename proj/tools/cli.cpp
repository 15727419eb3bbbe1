#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "hcyl/autfree.hpp"
#include "hcyl/cylinder.hpp"
#include "hcyl/errors.hpp"
#include "hcyl/factor.hpp"
#include "hcyl/quotients.hpp"

namespace hcyl::cli {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string format = "text";
  std::string output;
  std::string family;
  long count = 0;
  std::uint64_t budget = StepBudget::kDefault;
  int jobs = 1;

  Exec exec() const { return jobs == 1 ? Exec::Serial : Exec::Parallel; }
};

struct Result {
  std::string out;
  std::string err;
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Maps library exceptions to exit codes and prefixes the message with the input path.
Result guarded(const std::string& label, const std::function<void(Result&)>& body) {
  Result r;
  const std::string prefix = label.empty() ? "" : label + ": ";
  try {
    body(r);
  } catch (const FactorizationIncomplete& e) {
    r.err += prefix + "factorization incomplete: " + e.what() + "\n";
    r.code = kFactorizationIncomplete;
  } catch (const InternalError& e) {
    r.err += prefix + "internal error: " + e.what() + "\n";
    r.code = kInternalError;
  } catch (const ParseError& e) {
    r.err += prefix + "parse error: " + e.what() + "\n";
    r.code = kInvalidInput;
  } catch (const ValidationError& e) {
    r.err += prefix + e.what() + "\n";
    r.code = kInvalidInput;
  } catch (const std::invalid_argument& e) {
    r.err += prefix + e.what() + "\n";
    r.code = kInvalidInput;
  } catch (const std::exception& e) {
    r.err += prefix + "internal error: " + e.what() + "\n";
    r.code = kInternalError;
  }
  return r;
}

std::string sigma_text(const IntMatrix& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < s.cols(); ++j) out += (j ? " " : "") + std::to_string(s(i, j));
  }
  return out + "]";
}

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

void cmd_check_one(const std::string& path, const RunConfig&, Result& r) {
  const AdmissiblePresentation p = parse_presentation(read_file(path));
  const ValidationReport rep = validate(p);
  std::string factors;
  for (auto d : rep.invariant_factors) factors += " " + std::to_string(d);
  if (!rep.valid()) {
    r.err += path + ": " + to_string(*rep.error) + ": " + rep.message + "\n";
    r.code = kInvalidInput;
    return;
  }
  r.out += path + ": valid\n";
  r.out += "  rank " + std::to_string(p.rank) + ", extras " + std::to_string(p.extras) + ", relators " +
           std::to_string(p.relators.size()) + "\n";
  r.out += "  relation matrix invariant factors:" + factors + "\n";
  r.out += "  H1 rank " + std::to_string(rep.h1_rank) + "\n";
}

// Invariants of one presentation; a failed quotient invariant is reported
// as UNKNOWN and the remaining ones are still printed.
void cmd_inv_one(const std::string& path, const RunConfig& cfg, Result& r) {
  const AdmissiblePresentation p = parse_presentation(read_file(path));
  require_valid(p);
  const bool machine = cfg.format == "machine";
  const MagnusMatrix mm = magnus_matrix(p, cfg.exec());
  const UnitClassForm tau = torsion(p, cfg.exec());
  const RationalFunction det_r = mm.det();

  auto quotient = [&](const std::function<QuotientClass(StepBudget&)>& fn) {
    StepBudget budget(cfg.budget);
    try {
      return fn(budget).to_string();
    } catch (const FactorizationIncomplete& e) {
      r.err += path + ": factorization incomplete: " + e.what() + "\n";
      r.code = kFactorizationIncomplete;
      return std::string("UNKNOWN");
    }
  };
  const std::string rhat = quotient([&](StepBudget& b) { return reduce(det_r, QuotientLevel::ModH, b); });
  const std::string ttilde =
      quotient([&](StepBudget& b) { return reduce(RationalFunction(tau.poly()), QuotientLevel::ModHAN, b); });

  if (machine) {
    r.out += "sigma = " + sigma_text(mm.sigma) + "\n";
    for (std::size_t i = 0; i < mm.r.rows(); ++i)
      for (std::size_t j = 0; j < mm.r.cols(); ++j) {
        r.out += "magnus[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + mm.r(i, j).to_string() +
                 "\n";
      }
    r.out += "tau = " + tau.to_string() + "\n";
    r.out += "det_r = " + det_r.to_string() + "\n";
    r.out += "r_hat = " + rhat + "\n";
    r.out += "tau_tilde = " + ttilde + "\n";
  } else {
    r.out += "sigma:\n" + indent(mm.sigma.to_string());
    r.out += "magnus matrix r:\n" + indent(mm.r.to_string());
    r.out += "torsion tau (mod +-H): " + tau.to_string() + "\n";
    r.out += "det r: " + det_r.to_string() + "\n";
    r.out += "r_hat (mod +-H): " + rhat + "\n";
    r.out += "tau_tilde (mod +-H.A.N): " + ttilde + "\n";
  }
}

void cmd_endo_one(const std::string& path, const RunConfig& cfg, Result& r) {
  const FreeEndomorphism phi = parse_endomorphism(read_file(path));
  const MagnusMatrix mm = magnus_of_endo(phi, cfg.exec());
  const LaurentPoly det = bareiss_det(fox_matrix_of_endo(phi, cfg.exec()), cfg.exec());
  std::string rt;
  try {
    StepBudget budget(cfg.budget);
    rt = r_tilde(phi, budget).to_string();
  } catch (const FactorizationIncomplete& e) {
    r.err += path + ": factorization incomplete: " + e.what() + "\n";
    r.code = kFactorizationIncomplete;
    rt = "UNKNOWN";
  }
  if (cfg.format == "machine") {
    r.out += "sigma = " + sigma_text(mm.sigma) + "\n";
    for (std::size_t i = 0; i < mm.r.rows(); ++i)
      for (std::size_t j = 0; j < mm.r.cols(); ++j) {
        r.out += "magnus[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = " + mm.r(i, j).to_string() +
                 "\n";
      }
    r.out += "det_r = " + det.to_string() + "\n";
    r.out += "r_tilde = " + rt + "\n";
  } else {
    r.out += "abelianization:\n" + indent(mm.sigma.to_string());
    r.out += "magnus matrix r:\n" + indent(mm.r.to_string());
    r.out += "det r: " + det.to_string() + "\n";
    r.out += "r_tilde (mod +-H.A'): " + rt + "\n";
  }
}

int per_file(const RunConfig& cfg, std::ostream& out, std::ostream& err,
             void (*fn)(const std::string&, const RunConfig&, Result&)) {
  std::vector<Result> results(cfg.inputs.size());
  const bool many = cfg.inputs.size() > 1;
  // Files run concurrently; the kernels inside each stay serial.
  RunConfig inner = cfg;
  if (many) inner.jobs = 1;
  parallel_for(cfg.inputs.size(), many ? cfg.exec() : Exec::Serial, [&](std::size_t i) {
    results[i] = guarded(cfg.inputs[i], [&](Result& r) { fn(cfg.inputs[i], inner, r); });
  });
  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (many && !results[i].out.empty()) out << "== " << cfg.inputs[i] << "\n";
    out << results[i].out;
    err << results[i].err;
    code = std::max(code, results[i].code);
  }
  return code;
}

int cmd_compose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Result r = guarded("", [&](Result& res) {
    const AdmissiblePresentation p1 = parse_presentation(read_file(cfg.inputs[0]));
    const AdmissiblePresentation p2 = parse_presentation(read_file(cfg.inputs[1]));
    require_valid(p1);
    require_valid(p2);
    const std::string text = to_text(compose(p1, p2));
    if (cfg.output.empty()) {
      res.out = text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot write " + cfg.output);
      file << text;
    }
  });
  out << r.out;
  err << r.err;
  return r.code;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Result r = guarded("", [&](Result& res) {
    StepBudget budget(cfg.budget);
    std::vector<QuotientClass> classes;
    std::size_t distinct = 0, pairs = 0;
    if (cfg.family == "cfk") {
      const auto ws = witness_family_cfk(cfg.count, budget, cfg.exec());
      std::vector<UnitClassForm> nums;
      for (const auto& w : ws) {
        nums.emplace_back(w.value.num());
        classes.push_back(w.cls);
        res.out += "m = " + std::to_string(w.m) + "\n";
        res.out += "  value: " + w.value.to_string() + "\n";
        res.out += "  class (mod +-H): " + w.cls.to_string() + "\n";
        res.out += std::string("  numerator irreducible by linear criterion: ") +
                   (w.numerator_irreducible ? "yes" : "no") + "\n";
      }
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j, ++pairs)
          distinct += ws[i].cls != ws[j].cls &&
                      assert_distinct(nums[i], nums[j], QuotientLevel::ModH) == Distinctness::Distinct;
      res.out += "distinct pairs (mod +-H, ratio certificates): " + std::to_string(distinct) + " of " +
                 std::to_string(pairs) + "\n";
    } else {
      const auto ws = witness_family_fm(cfg.count, budget, cfg.exec());
      for (const auto& w : ws) {
        classes.push_back(w.cls);
        res.out += "m = " + std::to_string(w.m) + " (2m+1 = " + std::to_string(2 * w.m + 1) + ")\n";
        res.out += "  (1,1) entry: " + w.entry.to_string() + "\n";
        res.out += "  class (mod +-H.A'): " + w.cls.to_string() + "\n";
      }
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j, ++pairs)
          distinct += assert_distinct(UnitClassForm(ws[i].entry), UnitClassForm(ws[j].entry),
                                      QuotientLevel::ModHA) == Distinctness::Distinct;
      res.out += "distinct pairs (orbit certificates): " + std::to_string(distinct) + " of " +
                 std::to_string(pairs) + "\n";
    }
    res.out += "independence_rank = " + std::to_string(independence_rank(classes)) + "\n";
  });
  out << r.out;
  err << r.err;
  return r.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magnus representation, torsion and quotient invariants of homology cylinders"};
  app.name("hcyl");
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--budget", cfg.budget, "Step budget for polynomial factorization")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs,-j", cfg.jobs, "OpenMP threads (1 = serial kernels)")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Validate presentation files");
  check->add_option("files", cfg.inputs, "Presentation files")->required()->check(CLI::ExistingFile);

  auto* inv = app.add_subcommand("inv", "Print sigma, r, tau, det r, r_hat and tau_tilde");
  inv->add_option("files", cfg.inputs, "Presentation files")->required()->check(CLI::ExistingFile);
  inv->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  auto* comp = app.add_subcommand("compose", "Stack two presentations");
  comp->add_option("files", cfg.inputs, "Two presentation files")->required()->expected(2)->check(CLI::ExistingFile);
  comp->add_option("-o,--output", cfg.output, "Write the composed presentation here");

  auto* endo = app.add_subcommand("endo", "Magnus matrix and r_tilde of a free-group endomorphism");
  endo->add_option("files", cfg.inputs, "Endomorphism files")->required()->check(CLI::ExistingFile);
  endo->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  auto* wit = app.add_subcommand("witness", "Generate a witness family and its independence rank");
  wit->add_option("--family", cfg.family, "cfk or fm")->required()->check(CLI::IsMember({"cfk", "fm"}));
  wit->add_option("--count", cfg.count, "Number of family members")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  omp_set_num_threads(cfg.jobs);
  if (*check) return per_file(cfg, out, err, cmd_check_one);
  if (*inv) return per_file(cfg, out, err, cmd_inv_one);
  if (*endo) return per_file(cfg, out, err, cmd_endo_one);
  if (*comp) return cmd_compose(cfg, out, err);
  return cmd_witness(cfg, out, err);
}

}  // namespace hcyl::cli
