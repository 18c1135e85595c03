#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "potalg/abelian.hpp"
#include "potalg/classify3.hpp"
#include "potalg/corpus.hpp"
#include "potalg/groebner.hpp"
#include "potalg/json_io.hpp"
#include "potalg/parse.hpp"
#include "potalg/potential_complex.hpp"
#include "potalg/series.hpp"

using namespace potalg;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string field = "";
  std::string order = "x>y";
};

FieldSpec resolve_field(const std::string& flag) {
  std::string spec = flag;
  if (spec.empty()) {
    const char* env = std::getenv("POTALG_FIELD");
    spec = env == nullptr ? "rational" : env;
  }
  if (spec == "rational" || spec == "q" || spec == "Q")
    return FieldSpec::rationals();
  if (spec == "zp") return FieldSpec::prime_field();
  if (spec.rfind("zp:", 0) == 0)
    return FieldSpec::prime_field(std::stoull(spec.substr(3)));
  throw StructuralError("unknown field '" + spec + "' (rational|zp|zp:P)");
}

MonomialOrder resolve_order(const std::string& flag) {
  if (flag == "x>y") return MonomialOrder::deglex({0, 1});
  if (flag == "y>x") return MonomialOrder::deglex({1, 0});
  throw StructuralError("unknown order '" + flag + "' (x>y|y>x)");
}

Potential parse_potential(const std::string& text, const FieldSpec& field) {
  return Potential(parse_ncpoly(text, field));
}

std::vector<NcPoly> parse_relation_list(const std::string& text,
                                        const FieldSpec& field) {
  std::vector<NcPoly> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t stop = text.find(';', start);
    std::string piece = text.substr(
        start, stop == std::string::npos ? std::string::npos : stop - start);
    if (piece.find_first_not_of(" \t\n") != std::string::npos)
      out.push_back(parse_ncpoly(piece, field));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (out.empty()) throw DomainError("no relations given");
  return out;
}

std::map<int, long> parse_degree_counts(const std::string& text) {
  std::map<int, long> out;
  if (text.empty()) return out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t stop = text.find(',', start);
    std::string piece = text.substr(
        start, stop == std::string::npos ? std::string::npos : stop - start);
    size_t colon = piece.find(':');
    if (colon == std::string::npos)
      throw StructuralError("relation counts look like deg:count,...");
    out[std::stoi(piece.substr(0, colon))] +=
        std::stol(piece.substr(colon + 1));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string dim_report_text(const DimReport& r) {
  std::string out = "per_degree: ";
  for (size_t i = 0; i < r.per_degree.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(r.per_degree[i]);
  }
  out += "\ntotal: " +
         (r.total ? std::to_string(*r.total) : std::string("Infinite"));
  out += "\nmethod: " + DimReport::method_name(r.method);
  if (!r.verdict.empty()) out += "\nverdict: " + r.verdict;
  return out + "\n";
}

TruncatedGB graded_basis_for(const Potential& f, const MonomialOrder& ord,
                             int depth) {
  if (!f.is_homogeneous())
    throw DomainError("graded dimensions need a homogeneous potential");
  TruncatedGB gb = complete(f.relations(), ord, depth);
  if (!gb.graded_certified(depth))
    throw DomainError("completion not certified to the requested depth");
  return gb;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for two-generator potential algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--field/--order after the verb

  Options opt;
  app.add_option("--format", opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", opt.field, "rational|zp|zp:P (or POTALG_FIELD)");
  app.add_option("--order", opt.order, "x>y|y>x")
      ->check(CLI::IsMember({"x>y", "y>x"}));

  std::string potential_text, relations_text, family_text, eval_text;
  int depth = 12, bound = 12, degree = 5, max_degree = 14, window = 4;
  int max_k = 6, generators = 2, tail_from = 0;
  long tail_count = 2;
  int corpus_count = 10, corpus_degree = 0;
  std::uint64_t seed = 1;

  CLI::App* derive = app.add_subcommand("derive", "cyclic partial derivatives");
  derive->add_option("--potential", potential_text)->required();

  CLI::App* gb_cmd = app.add_subcommand("gb", "truncated Groebner basis");
  gb_cmd->add_option("--potential", potential_text);
  gb_cmd->add_option("--relations", relations_text, "semicolon-separated");
  gb_cmd->add_option("--bound", bound);

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series");
  hilbert->add_option("--potential", potential_text)->required();
  hilbert->add_option("--depth", depth);

  CLI::App* dim = app.add_subcommand("dim", "graded dimensions");
  dim->add_option("--potential", potential_text)->required();
  dim->add_option("--depth", depth);
  bool use_oracle = false;
  dim->add_flag("--oracle", use_oracle, "brute-force linear-algebra oracle");

  CLI::App* truncdim = app.add_subcommand("truncdim", "truncated quotient dim");
  truncdim->add_option("--potential", potential_text)->required();
  truncdim->add_option("--degree", degree);

  CLI::App* complete_dim =
      app.add_subcommand("complete-dim", "completion dimension probe");
  complete_dim->add_option("--potential", potential_text)->required();
  complete_dim->add_option("--max-degree", max_degree);
  complete_dim->add_option("--window", window);

  CLI::App* gs = app.add_subcommand("gs", "Golod-Shafarevich certificate");
  gs->add_option("--generators", generators);
  gs->add_option("--relations", relations_text, "deg:count,...");
  gs->add_option("--tail-from", tail_from, "two-per-degree tail start");
  gs->add_option("--tail-count", tail_count);
  gs->add_option("--depth", depth);
  gs->add_option("--eval", eval_text, "rational evaluation point");

  CLI::App* complex_cmd = app.add_subcommand("complex", "potential complex");
  complex_cmd->add_option("--potential", potential_text)->required();
  complex_cmd->add_option("--max-k", max_k);
  complex_cmd->add_option("--bound", bound);

  CLI::App* classify = app.add_subcommand("classify3", "degree-3 classes");
  classify->add_option("--potential", potential_text)->required();

  CLI::App* abelian_cmd =
      app.add_subcommand("abelian", "commutative basis and dimension");
  abelian_cmd->add_option("--potential", potential_text)->required();

  CLI::App* gap = app.add_subcommand("gap", "Wemyss gap analysis");
  gap->add_option("--family", family_text, "a_3,...,a_n")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "seeded random potentials");
  corpus->add_option("--count", corpus_count);
  corpus->add_option("--seed", seed);
  corpus->add_option("--homogeneous-degree", corpus_degree,
                     "0 = mixed valuation-3 corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    FieldSpec field = resolve_field(opt.field);
    MonomialOrder ord = resolve_order(opt.order);

    if (*derive) {
      Potential f = parse_potential(potential_text, field);
      json j{{"dx", to_text(f.dx(), ord)}, {"dy", to_text(f.dy(), ord)}};
      emit(opt, j,
           "d/dx: " + to_text(f.dx(), ord) +
               "\nd/dy: " + to_text(f.dy(), ord) + "\n");
    } else if (*gb_cmd) {
      std::vector<NcPoly> rels;
      if (!potential_text.empty()) {
        Potential f = parse_potential(potential_text, field);
        rels = f.relations();
      } else {
        rels = parse_relation_list(relations_text, field);
      }
      TruncatedGB basis = complete(rels, ord, bound);
      json elements = json::array();
      for (const NcPoly& e : basis.elements())
        elements.push_back(to_text(e, ord));
      json j{{"order", ord.description()},
             {"bound", basis.degree_bound()},
             {"certificate", certificate_name(basis.certificate())},
             {"elements", elements},
             {"overlaps_processed", basis.overlaps_processed()},
             {"unresolved_above_bound", basis.unresolved_overlaps().size()}};
      emit(opt, j, basis.serialize());
    } else if (*hilbert) {
      Potential f = parse_potential(potential_text, field);
      TruncatedGB basis = graded_basis_for(f, ord, depth);
      auto [census, rs] = hilbert_from_forbidden(basis.leading_words(), depth);
      std::vector<Scalar> head;
      for (const mpz_class& v : census) head.emplace_back(mpq_class(v));
      json j{{"series", series_head_str(head)}, {"rational", rs.str()}};
      emit(opt, j, series_head_str(head) + "\nH = " + rs.str() + "\n");
    } else if (*dim) {
      Potential f = parse_potential(potential_text, field);
      DimReport r = use_oracle
                        ? graded_dim_oracle(f.relations(), depth, ord)
                        : graded_dims(graded_basis_for(f, ord, depth), depth);
      emit(opt, to_json(r), dim_report_text(r));
    } else if (*truncdim) {
      Potential f = parse_potential(potential_text, field);
      DimReport r = truncated_quotient_dim(f, degree);
      emit(opt, to_json(r), dim_report_text(r));
    } else if (*complete_dim) {
      Potential f = parse_potential(potential_text, field);
      DimReport r = completion_dim_probe(f, max_degree, window);
      emit(opt, to_json(r), dim_report_text(r));
    } else if (*gs) {
      std::map<int, long> counts = parse_degree_counts(relations_text);
      RationalSeries rs = tail_from > 0
                              ? gs_series_with_tail(generators, counts,
                                                    tail_from, tail_count)
                              : gs_series(generators, counts);
      auto [head, first_negative] = abs_truncate(rs.expand(), depth);
      json j{{"series", rs.str()},
             {"head", series_head_str(expand(rs, depth))},
             {"truncated_head", series_head_str(head)}};
      j["first_negative"] =
          first_negative ? json(*first_negative) : json(nullptr);
      std::string text = "G = " + rs.str() +
                         "\nseries: " + series_head_str(expand(rs, depth)) +
                         "\nfirst_negative: " +
                         (first_negative ? std::to_string(*first_negative)
                                         : std::string("none")) +
                         "\n";
      if (!eval_text.empty()) {
        Scalar t0 = Scalar::parse(eval_text, field);
        Scalar value = eval_exact(rs.denominator(), t0);
        int sign = value.sign();
        j["eval"] = {{"at", t0.str()}, {"value", value.str()}, {"sign", sign}};
        text += "denominator at " + t0.str() + ": " + value.str() + " (sign " +
                std::to_string(sign) + ")\n";
      }
      emit(opt, j, text);
    } else if (*complex_cmd) {
      Potential f = parse_potential(potential_text, field);
      int n = f.degree() - 1;
      int needed = std::max(bound, max_k + n + 1);
      TruncatedGB basis = graded_basis_for(f, ord, needed);
      bool chain = verify_chain(f, basis, max_k + n + 1);
      json slices = json::array();
      std::string text =
          std::string("chain: ") + (chain ? "ok" : "BROKEN") + "\n";
      for (int k = 0; k <= max_k; ++k) {
        SliceReport r = slice_exactness(f, basis, k);
        slices.push_back(to_json(r));
        text += "k=" + std::to_string(k) + " dims=[" +
                std::to_string(r.dims[0]) + "," + std::to_string(r.dims[1]) +
                "," + std::to_string(r.dims[2]) + "," +
                std::to_string(r.dims[3]) + "]" + " exact=[" +
                (r.exact_at[0] ? "1" : "0") + (r.exact_at[1] ? "1" : "0") +
                (r.exact_at[2] ? "1" : "0") +
                "] euler_defect=" + std::to_string(r.euler_defect) + "\n";
      }
      emit(opt, json{{"chain", chain}, {"slices", slices}}, text);
    } else if (*classify) {
      Potential f = parse_potential(potential_text, field);
      CanonicalClassData data = canonical_data(classify_cubic(f));
      json j{{"class", cubic_tag_name(data.tag)},
             {"canonical_potential", to_text(data.potential.body(), ord)},
             {"series", series_head_str(data.series_head)}};
      emit(opt, j,
           cubic_tag_name(data.tag) +
               "\ncanonical: " + to_text(data.potential.body(), ord) +
               "\nseries: " + series_head_str(data.series_head) + "\n");
    } else if (*abelian_cmd) {
      Potential f = parse_potential(potential_text, field);
      std::vector<CPoly> rels;
      for (const NcPoly& g : f.relations()) rels.push_back(abelianize(g));
      std::vector<CPoly> basis = buchberger_lex2(rels);
      std::optional<long long> d = quotient_dim_comm(basis);
      json elements = json::array();
      std::string text;
      for (const CPoly& g : basis) {
        elements.push_back(g.str());
        text += g.str() + "\n";
      }
      text +=
          "dim: " + (d ? std::to_string(*d) : std::string("Infinite")) + "\n";
      json j{{"basis", elements}};
      j["dim"] = d ? json(*d) : json("Infinite");
      emit(opt, j, text);
    } else if (*gap) {
      std::vector<Scalar> coeffs;
      size_t start = 0;
      while (start <= family_text.size()) {
        size_t stop = family_text.find(',', start);
        coeffs.push_back(Scalar::parse(
            family_text.substr(start, stop == std::string::npos
                                          ? std::string::npos
                                          : stop - start),
            field));
        if (stop == std::string::npos) break;
        start = stop + 1;
      }
      GapReport r = wemyss_gap(coeffs);
      std::string text =
          "dim_a: " +
          (r.dim_a ? std::to_string(*r.dim_a) : std::string("Infinite")) +
          "\ndim_b: " + std::to_string(r.dim_b) + "\ngap: " +
          (r.gap ? std::to_string(*r.gap) : std::string("undefined")) + "\n";
      emit(opt, to_json(r), text);
    } else if (*corpus) {
      std::mt19937_64 rng(seed);
      std::string text = "# seed=" + std::to_string(seed) + "\n";
      json list = json::array();
      for (int i = 0; i < corpus_count; ++i) {
        Potential f = corpus_degree > 0
                          ? random_homogeneous_potential(rng, corpus_degree)
                          : random_cyclic_potential(rng);
        std::string line = to_text(f.body(), ord);
        list.push_back(line);
        text += line + "\n";
      }
      emit(opt, json{{"seed", seed}, {"potentials", list}}, text);
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
