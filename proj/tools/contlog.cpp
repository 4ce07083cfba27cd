// Batch driver: parse/validate/evaluate, proof checking, name construction,
// staged completion, and presentation queries over the file formats described
// in the README.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "contlog/io.hpp"
#include "contlog/parse.hpp"
#include "contlog/presentation.hpp"

using namespace contlog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  return in;
}

Signature load_signature_file(const std::string& path) {
  auto in = open_input(path);
  return load_signature(in);
}

FiniteStructure load_structure_file(const std::string& path, const Signature& sig) {
  auto in = open_input(path);
  return load_structure(in, sig);
}

struct NameSource {
  std::unique_ptr<FiniteModelOracle> oracle;
  std::unique_ptr<TheoryName> name;
  std::unique_ptr<FiniteStructure> model;
  std::unique_ptr<WffCoder> coder;
};

NameSource open_name(const Signature& sig, const std::string& model_path,
                     const std::string& name_path) {
  NameSource src;
  if (!model_path.empty()) {
    src.model = std::make_unique<FiniteStructure>(load_structure_file(model_path, sig));
    ValidationReport rep = validate_structure(*src.model);
    if (!rep.ok()) {
      std::string msg = "structure is not a continuous pre-structure:";
      for (const auto& v : rep.violations) msg += "\n  " + v;
      throw std::domain_error(msg);
    }
    src.coder = std::make_unique<WffCoder>(sig, CodingLevel::Base);
    src.oracle = degree_oracle_from_finite_model(*src.model, *src.coder);
    src.name = name_from_oracle(*src.oracle);
  } else {
    auto in = open_input(name_path);
    src.name = std::make_unique<StreamName>(load_name_stream(in));
  }
  return src;
}

std::vector<Term> parse_term_list(const std::string& joined, const Signature& sig) {
  std::vector<Term> out;
  std::string cur;
  std::istringstream ss(joined);
  while (std::getline(ss, cur, ';')) {
    if (cur.empty()) continue;
    out.push_back(parse_term(cur, sig, true));
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for continuous first-order logic"};
  app.require_subcommand(1);

  std::string sig_path, model_path, name_path, proof_path, trace_path, stats_path;
  std::string wff_text, terms_text, enumeration = "canonical", resume_path, out_path;
  std::uint64_t stages = 0, prec = 0, count = 0;
  std::uint64_t stage_budget = kDefaultQueryStageBudget;
  std::string pred_name;
  bool henkin_terms = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a wff and print its normal form");
  cmd_parse->add_option("--sig", sig_path)->required();
  cmd_parse->add_flag("--henkin", henkin_terms, "accept witness-constant terms");
  cmd_parse->add_option("wff", wff_text)->required();

  auto* cmd_validate = app.add_subcommand("validate", "check a structure file");
  cmd_validate->add_option("--sig", sig_path)->required();
  cmd_validate->add_option("--model", model_path)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a sentence in a structure");
  cmd_eval->add_option("--sig", sig_path)->required();
  cmd_eval->add_option("--model", model_path)->required();
  cmd_eval->add_option("wff", wff_text)->required();

  auto* cmd_proof = app.add_subcommand("check-proof", "check a Hilbert-style proof file");
  cmd_proof->add_option("--sig", sig_path)->required();
  cmd_proof->add_option("--proof", proof_path)->required();

  auto* cmd_name = app.add_subcommand("make-name", "dump a prefix of the model's theory name");
  cmd_name->add_option("--sig", sig_path)->required();
  cmd_name->add_option("--model", model_path)->required();
  cmd_name->add_option("--count", count)->required();
  cmd_name->add_option("--out", out_path);

  auto* cmd_complete = app.add_subcommand("complete", "run completion stages");
  cmd_complete->add_option("--sig", sig_path)->required();
  cmd_complete->add_option("--model", model_path);
  cmd_complete->add_option("--name", name_path);
  cmd_complete->add_option("--stages", stages)->required();
  cmd_complete->add_option("--trace", trace_path);
  cmd_complete->add_option("--resume", resume_path);
  cmd_complete->add_option("--enumeration", enumeration)->check(CLI::IsMember({"canonical", "test"}));

  auto* cmd_query = app.add_subcommand("query", "approximate a predicate on rational points");
  cmd_query->add_option("--sig", sig_path)->required();
  cmd_query->add_option("--model", model_path);
  cmd_query->add_option("--name", name_path);
  cmd_query->add_option("--pred", pred_name)->required();
  cmd_query->add_option("--terms", terms_text)->required();
  cmd_query->add_option("--prec", prec)->required();
  cmd_query->add_option("--stage-budget", stage_budget);
  cmd_query->add_option("--stats", stats_path);
  cmd_query->add_option("--enumeration", enumeration)->check(CLI::IsMember({"canonical", "test"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_parse->parsed()) {
      Signature sig = load_signature_file(sig_path);
      try {
        Wff w = parse_wff(wff_text, sig, henkin_terms);
        std::cout << print_wff(w, sig) << "\n";
      } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitDomain;
      }
      return kExitOk;
    }

    if (cmd_validate->parsed()) {
      Signature sig = load_signature_file(sig_path);
      FiniteStructure m = load_structure_file(model_path, sig);
      ValidationReport rep = validate_structure(m);
      for (const auto& v : rep.violations) std::cout << v << "\n";
      std::cout << (rep.ok() ? "valid" : "invalid") << "\n";
      return rep.ok() ? kExitOk : kExitDomain;
    }

    if (cmd_eval->parsed()) {
      Signature sig = load_signature_file(sig_path);
      FiniteStructure m = load_structure_file(model_path, sig);
      ValidationReport rep = validate_structure(m);
      if (!rep.ok()) {
        for (const auto& v : rep.violations) std::cerr << v << "\n";
        return kExitDomain;
      }
      Wff w = parse_wff(wff_text, sig, false);
      std::cout << sentence_value(m, w).str() << "\n";
      return kExitOk;
    }

    if (cmd_proof->parsed()) {
      Signature sig = load_signature_file(sig_path);
      auto in = open_input(proof_path);
      ProofFile pf = load_proof(in, sig);
      ProofVerdict v = check_proof(sig, pf.premises, pf.lines);
      if (v.accepted) {
        std::cout << "accepted (" << pf.lines.size() << " lines)\n";
        return kExitOk;
      }
      std::cout << "rejected at line " << v.bad_line + 1 << ": " << v.reason << "\n";
      return kExitDomain;
    }

    if (cmd_name->parsed()) {
      Signature sig = load_signature_file(sig_path);
      NameSource src = open_name(sig, model_path, "");
      std::ostringstream body;
      save_name_prefix(body, *src.name, count);
      if (out_path.empty())
        std::cout << body.str();
      else
        write_file(out_path, body.str());
      return kExitOk;
    }

    if (cmd_complete->parsed()) {
      if (model_path.empty() == name_path.empty())
        throw CLI::ValidationError("complete needs exactly one of --model / --name");
      Signature sig = load_signature_file(sig_path);
      NameSource src = open_name(sig, model_path, name_path);
      auto en = make_enumeration(enumeration, sig, CodingLevel::Henkin);
      CompletionEngine engine(sig, *src.name, *en);
      if (!resume_path.empty()) {
        auto in = open_input(resume_path);
        std::string en_name;
        CompletionState st = load_completion_state(in, en_name);
        if (en_name != en->name())
          throw std::domain_error("state was produced under enumeration '" + en_name + "'");
        engine.restore(std::move(st));
      }
      engine.run_to_stage(stages);
      std::ostringstream body;
      save_completion_state(body, engine.state(), en->name());
      if (trace_path.empty())
        std::cout << body.str();
      else
        write_file(trace_path, body.str());
      std::cout << "stage " << engine.state().stage << ", " << engine.state().codes.size()
                << " wffs added\n";
      return kExitOk;
    }

    if (cmd_query->parsed()) {
      if (model_path.empty() == name_path.empty())
        throw CLI::ValidationError("query needs exactly one of --model / --name");
      Signature sig = load_signature_file(sig_path);
      unsigned pred;
      if (!sig.find_predicate(pred_name, pred))
        throw std::domain_error("unknown predicate: " + pred_name);
      std::vector<Term> terms = parse_term_list(terms_text, sig);
      NameSource src = open_name(sig, model_path, name_path);
      auto en = make_enumeration(enumeration, sig, CodingLevel::Henkin);
      PresentationHandle handle(sig, *src.name, *en, stage_budget);
      QueryResult r = handle.query_predicate(pred, terms, prec);
      std::ostringstream body;
      body << "answer " << r.answer.get_str() << "\n";
      body << "bracket " << (r.max_lower ? r.max_lower->get_str() : "-") << " "
           << (r.min_rest ? r.min_rest->get_str() : "-") << "\n";
      body << "stage " << r.stage_m << "\n";
      body << "name-reads " << r.stats.name_reads << "\n";
      body << "structure-reads-outside-name " << r.stats.structure_reads_outside_name() << "\n";
      std::cout << body.str();
      if (!stats_path.empty()) write_file(stats_path, body.str());
      return kExitOk;
    }
  } catch (const QueryTimeout& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const BudgetExhausted& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
