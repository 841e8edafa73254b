// Command-line front end: enumeration, pairwise checks, classification runs,
// method cross-validation, and report emission.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evoclass/classify.hpp"
#include "evoclass/parallel.hpp"
#include "evoclass/text.hpp"

using namespace evoclass;
using json = nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kResource = 2, kInternal = 3 };

enum class Format { table, jsonl, csv };

struct FieldOpts {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
};

struct CapOpts {
  std::uint64_t field_size = gf::kDefaultSizeCap;
  std::uint64_t enumeration = evo::kDefaultEnumerationCap;
  std::uint64_t exhaustion = search::Caps{}.exhaustion;
  std::uint32_t witness_isom = search::Caps{}.isomorphism_q;
  std::uint32_t witness_strong = search::Caps{}.strong_isotopism_q;
  std::uint32_t witness_isot = search::Caps{}.isotopism_q;
  std::uint64_t buchberger = poly::BuchbergerLimits{}.max_pair_reductions;

  search::Caps search_caps() const {
    return search::Caps{exhaustion, witness_isom, witness_strong, witness_isot};
  }
};

std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) p = q;  // q itself is prime
  std::uint32_t k = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, k);
}

gf::Field make_field(const FieldOpts& opts, std::uint64_t size_cap = gf::kDefaultSizeCap) {
  if (opts.q) {
    auto pk = factor_prime_power(opts.q);
    if (!pk) raise(Errc::parse_error, "--q must be a prime power");
    return gf::Field::make(pk->first, pk->second, size_cap);
  }
  if (!opts.p) raise(Errc::parse_error, "either --q or --p (with optional --k) is required");
  return gf::Field::make(opts.p, opts.k, size_cap);
}

void add_field_options(CLI::App* cmd, FieldOpts& opts) {
  cmd->add_option("--q", opts.q, "field order q = p^k (prime power)");
  cmd->add_option("--p", opts.p, "field characteristic (prime)");
  cmd->add_option("--k", opts.k, "extension degree (with --p)")->capture_default_str();
}

void add_cap_options(CLI::App* cmd, CapOpts& caps) {
  cmd->add_option("--cap-field", caps.field_size, "field size cap on p^k");
  cmd->add_option("--cap-enum", caps.enumeration, "algebra enumeration cap on q^(n^2)");
  cmd->add_option("--cap-exhaust", caps.exhaustion, "exhaustive scan cap");
  cmd->add_option("--cap-witness-isom", caps.witness_isom, "max q for isomorphism witness search");
  cmd->add_option("--cap-witness-strong", caps.witness_strong, "max q for strong-isotopism witness search");
  cmd->add_option("--cap-witness-isot", caps.witness_isot, "max q for isotopism witness search");
  cmd->add_option("--cap-buchberger", caps.buchberger, "max S-pair reductions per basis computation");
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::jsonl;
  if (s == "csv") return Format::csv;
  raise(Errc::parse_error, "unknown format '" + s + "'");
}

Relation need_relation(const std::string& s) {
  auto r = parse_relation(s);
  if (!r) raise(Errc::parse_error, "unknown relation '" + s + "'");
  return *r;
}

classify::Method need_method(const std::string& s) {
  auto m = classify::parse_method(s);
  if (!m) raise(Errc::parse_error, "unknown method '" + s + "'");
  return *m;
}

poly::OrderTag need_order(const std::string& s) {
  if (s == "grevlex") return poly::OrderTag::grevlex;
  if (s == "lex") return poly::OrderTag::lex;
  raise(Errc::parse_error, "unknown order '" + s + "'");
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Algebra argument: inline literal or @path to a JSON document with fields
// q (or p, k), n, rows.
evo::EvolutionAlgebra load_algebra(const std::string& arg, const gf::Field& field, std::uint32_t n) {
  if (arg.empty() || arg[0] != '@') return text::parse_algebra_literal(field, n, arg);
  std::ifstream in(arg.substr(1));
  if (!in) raise(Errc::parse_error, "cannot open algebra file '" + arg.substr(1) + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, std::string("bad algebra file: ") + e.what());
  }
  gf::Field file_field = field;
  if (doc.contains("q"))
    file_field = make_field(FieldOpts{doc["q"].get<std::uint32_t>(), 0, 1});
  else if (doc.contains("p"))
    file_field = make_field(FieldOpts{0, doc["p"].get<std::uint32_t>(), doc.value("k", 1u)});
  if (file_field != field) raise(Errc::parse_error, "algebra file field disagrees with the requested field");
  std::uint32_t fn = doc.value("n", n);
  if (fn != n) raise(Errc::parse_error, "algebra file dimension disagrees with --n");
  if (!doc.contains("rows")) raise(Errc::parse_error, "algebra file missing 'rows'");
  std::string literal;
  for (const auto& row : doc["rows"]) {
    if (!literal.empty()) literal += ';';
    bool first = true;
    for (const auto& cell : row) {
      if (!first) literal += ',';
      first = false;
      literal += cell.get<std::string>();
    }
  }
  return text::parse_algebra_literal(field, n, literal);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::uint64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Timings vary run to run, so they go to stderr; stdout stays byte-identical
// for identical configurations.
void report_timing(const std::string& subject, std::uint64_t ms) {
  std::cerr << "# timing_ms " << subject << " " << ms << "\n";
}

std::string label_of(const evo::EvolutionAlgebra& a) {
  return a.dim() == 2 ? classify::isomorphism_label_2d(a).str(a.field()) : std::string("-");
}

json signature_json(const evo::EvolutionAlgebra& a) {
  json sig{{"annihilator_dim", a.annihilator_dim()}, {"derived_dim", a.derived_dim()}};
  if (a.dim() == 2) {
    sig["label"] = label_of(a);
    sig["isotopism_class"] = classify::isot_class_name(classify::isotopism_class_2d(a));
  }
  return sig;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const FieldOpts& fopts, std::uint32_t n, Format format, const CapOpts& caps) {
  gf::Field field = make_field(fopts, caps.field_size);
  evo::AlgebraEnumeration algebras(field, n, caps.enumeration);
  if (format == Format::csv) std::cout << "index,algebra\n";
  for (std::uint64_t i = 0; i < algebras.size(); ++i) {
    std::string lit = text::algebra_literal(algebras.at(i));
    switch (format) {
      case Format::table:
        std::cout << i << "\t" << lit << "\n";
        break;
      case Format::jsonl:
        std::cout << json{{"index", i}, {"algebra", lit}}.dump() << "\n";
        break;
      case Format::csv:
        std::cout << i << "," << csv_quote(lit) << "\n";
        break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const FieldOpts& fopts, std::uint32_t n, const std::string& left, const std::string& right,
              const std::string& relation_str, Format format, const CapOpts& caps) {
  gf::Field field = make_field(fopts, caps.field_size);
  Relation relation = need_relation(relation_str);
  evo::EvolutionAlgebra a = load_algebra(left, field, n);
  evo::EvolutionAlgebra b = load_algebra(right, field, n);
  auto witness = search::find_witness(a, b, relation, caps.search_caps());

  if (format == Format::jsonl) {
    json rec{{"left", text::algebra_literal(a)},
             {"right", text::algebra_literal(b)},
             {"relation", relation_name(relation)},
             {"found", witness.has_value()},
             {"left_signature", signature_json(a)},
             {"right_signature", signature_json(b)}};
    if (witness)
      rec["witness"] = json{{"F", text::matrix_literal(witness->f)},
                            {"G", text::matrix_literal(witness->g)},
                            {"H", text::matrix_literal(witness->h)}};
    std::cout << rec.dump() << "\n";
    return kOk;
  }
  auto print_sig = [&](const char* tag, const evo::EvolutionAlgebra& x) {
    std::cout << tag << " " << text::algebra_literal(x) << "  ann=" << x.annihilator_dim()
              << " derived=" << x.derived_dim();
    if (x.dim() == 2)
      std::cout << " label=" << label_of(x)
                << " isotopism-class=" << classify::isot_class_name(classify::isotopism_class_2d(x));
    std::cout << "\n";
  };
  print_sig("left: ", a);
  print_sig("right:", b);
  std::cout << "relation: " << relation_name(relation) << "\n";
  if (witness) {
    std::cout << "witness: found\n";
    std::cout << "  F = " << text::matrix_literal(witness->f) << "\n";
    std::cout << "  G = " << text::matrix_literal(witness->g) << "\n";
    std::cout << "  H = " << text::matrix_literal(witness->h) << "\n";
  } else {
    std::cout << "witness: none\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// classify

void emit_partition(const classify::Partition& partition, Relation relation, classify::Method method,
                    Format format, bool members) {
  const gf::Field& field = partition.field;
  auto rep_of = [&](const classify::PartitionClass& cls) {
    return evo::algebra_at(field, partition.n, cls.representative_index);
  };
  switch (format) {
    case Format::jsonl: {
      std::cout << json{{"type", "partition"},
                        {"q", field.q()},
                        {"n", partition.n},
                        {"relation", relation_name(relation)},
                        {"method", classify::method_name(method)},
                        {"class_count", partition.classes.size()}}
                       .dump()
                << "\n";
      for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const auto& cls = partition.classes[i];
        evo::EvolutionAlgebra rep = rep_of(cls);
        json rec{{"type", "class"},
                 {"index", i},
                 {"representative", text::algebra_literal(rep)},
                 {"label", label_of(rep)},
                 {"size", cls.member_indices.size()}};
        if (members) {
          json list = json::array();
          for (auto idx : cls.member_indices)
            list.push_back(text::algebra_literal(evo::algebra_at(field, partition.n, idx)));
          rec["members"] = list;
        }
        std::cout << rec.dump() << "\n";
      }
      break;
    }
    case Format::csv: {
      std::cout << "index,representative,label,size" << (members ? ",members" : "") << "\n";
      for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const auto& cls = partition.classes[i];
        evo::EvolutionAlgebra rep = rep_of(cls);
        std::cout << i << "," << csv_quote(text::algebra_literal(rep)) << "," << label_of(rep) << ","
                  << cls.member_indices.size();
        if (members) {
          std::string joined;
          for (auto idx : cls.member_indices) {
            if (!joined.empty()) joined += '|';
            joined += text::algebra_literal(evo::algebra_at(field, partition.n, idx));
          }
          std::cout << "," << csv_quote(joined);
        }
        std::cout << "\n";
      }
      break;
    }
    case Format::table: {
      std::cout << "q=" << field.q() << " n=" << partition.n << " relation=" << relation_name(relation)
                << " method=" << classify::method_name(method) << " classes=" << partition.classes.size()
                << "\n";
      for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const auto& cls = partition.classes[i];
        evo::EvolutionAlgebra rep = rep_of(cls);
        std::cout << "  [" << i << "] rep=" << text::algebra_literal(rep) << "  label=" << label_of(rep)
                  << "  size=" << cls.member_indices.size() << "\n";
        if (members) {
          std::cout << "      members:";
          for (auto idx : cls.member_indices)
            std::cout << " " << text::algebra_literal(evo::algebra_at(field, partition.n, idx));
          std::cout << "\n";
        }
      }
      break;
    }
  }
}

int cmd_classify(const FieldOpts& fopts, std::uint32_t n, const std::string& relation_str,
                 const std::string& method_str, const std::string& order_str, Format format, bool members,
                 unsigned threads, const CapOpts& caps) {
  gf::Field field = make_field(fopts, caps.field_size);
  Relation relation = need_relation(relation_str);
  classify::Method method = need_method(method_str);
  poly::OrderTag order = need_order(order_str);
  Timer timer;
  classify::Partition partition =
      classify::classify_all(field, n, relation, method, threads, caps.search_caps(), order, caps.enumeration);
  emit_partition(partition, relation, method, format, members);
  report_timing("classify", timer.ms());
  return kOk;
}

// ---------------------------------------------------------------------------
// count-maps

int cmd_count_maps(const FieldOpts& fopts, std::uint32_t n, const std::string& left, const std::string& right,
                   const std::string& relation_str, const std::string& method_str,
                   const std::string& order_str, const std::string& encoding_str, Format format,
                   const CapOpts& caps) {
  gf::Field field = make_field(fopts, caps.field_size);
  Relation relation = need_relation(relation_str);
  if (relation == Relation::strong_isotopism)
    raise(Errc::parse_error, "count-maps supports isomorphism and isotopism");
  evo::EvolutionAlgebra a = load_algebra(left, field, n);
  evo::EvolutionAlgebra b = load_algebra(right, field, n);

  ideals::DetEncoding encoding = ideals::DetEncoding::power;
  if (encoding_str == "rabinowitsch")
    encoding = ideals::DetEncoding::rabinowitsch;
  else if (encoding_str != "power")
    raise(Errc::parse_error, "unknown det encoding '" + encoding_str + "'");

  ideals::IdealSpec ideal = relation == Relation::isomorphism ? ideals::isom_ideal(a, b, encoding)
                                                              : ideals::isot_ideal(a, b, encoding);
  ideals::CountOptions opts;
  if (method_str == "groebner")
    opts.method = ideals::CountMethod::groebner;
  else if (method_str == "exhaustive")
    opts.method = ideals::CountMethod::exhaustive;
  else
    raise(Errc::parse_error, "count-maps method must be groebner or exhaustive");
  opts.order = need_order(order_str);
  opts.exhaustion_cap = caps.exhaustion;
  opts.limits.max_pair_reductions = caps.buchberger;

  Timer timer;
  std::uint64_t count = ideals::count_points(ideal, opts);
  json rec{{"left", text::algebra_literal(a)},   {"right", text::algebra_literal(b)},
           {"relation", relation_name(relation)}, {"method", method_str},
           {"count", count}};
  switch (format) {
    case Format::jsonl:
      std::cout << rec.dump() << "\n";
      break;
    case Format::csv:
      std::cout << "left,right,relation,method,count\n"
                << csv_quote(rec["left"]) << "," << csv_quote(rec["right"]) << "," << relation_name(relation)
                << "," << method_str << "," << count << "\n";
      break;
    case Format::table:
      std::cout << "maps(" << relation_name(relation) << ", " << method_str << ") "
                << rec["left"].get<std::string>() << " -> " << rec["right"].get<std::string>() << ": "
                << count << "\n";
      break;
  }
  report_timing("count-maps", timer.ms());
  return kOk;
}

// ---------------------------------------------------------------------------
// groebner (debug)

int cmd_groebner(const FieldOpts& fopts, const std::string& vars_csv, const std::string& gens_str,
                 const std::string& order_str, bool field_eqs, Format format, const CapOpts& caps) {
  gf::Field field = make_field(fopts, caps.field_size);
  std::vector<std::string> names;
  for (auto& piece : text::split_top_level(vars_csv, ','))
    if (!piece.empty()) names.push_back(piece);
  if (names.empty()) raise(Errc::parse_error, "--vars requires at least one variable name");
  poly::Ring ring = poly::Ring::make(field, names);

  std::vector<poly::Polynomial> gens;
  for (auto& piece : text::split_top_level(gens_str, ';'))
    if (!piece.empty()) gens.push_back(text::parse_polynomial(ring, piece));
  if (gens.empty()) raise(Errc::parse_error, "--gens requires at least one polynomial");
  if (field_eqs)
    for (std::uint32_t v = 0; v < ring.nvars(); ++v)
      gens.push_back(poly::Polynomial::variable(ring, v, field.q()) - poly::Polynomial::variable(ring, v));

  poly::BuchbergerLimits limits;
  limits.max_pair_reductions = caps.buchberger;
  auto basis = poly::buchberger(gens, poly::MonomialOrder(need_order(order_str), ring.nvars()), limits);
  auto count = poly::standard_monomial_count(basis);

  if (format == Format::jsonl) {
    std::cout << json{{"type", "basis"},
                      {"order", order_str},
                      {"size", basis.members.size()},
                      {"standard_monomials", count ? json(*count) : json("infinite")}}
                     .dump()
              << "\n";
    for (const auto& g : basis.members) std::cout << json{{"type", "member"}, {"poly", g.str()}}.dump() << "\n";
  } else {
    std::cout << "reduced basis (" << order_str << "), " << basis.members.size() << " members\n";
    for (const auto& g : basis.members) std::cout << "  " << g.str() << "\n";
    std::cout << "standard monomials: ";
    if (count)
      std::cout << *count << "\n";
    else
      std::cout << "infinite\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(Format format, unsigned threads, const CapOpts& caps) {
  struct Row {
    std::uint32_t q;
    std::uint64_t isom_bruteforce = 0, isom_invariant = 0;
    std::optional<std::uint64_t> isom_groebner;
    std::uint64_t isot_invariant = 0;
    std::optional<std::uint64_t> isot_bruteforce, strong_bruteforce;
    bool agree = true;
    std::vector<std::string> representatives;
    std::uint64_t ms = 0;
  };
  std::vector<Row> rows;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    Row row;
    row.q = q;
    gf::Field field = gf::Field::make(q);
    Timer timer;
    auto brute = classify::classify_all(field, 2, Relation::isomorphism, classify::Method::bruteforce,
                                        threads, caps.search_caps());
    auto invariant = classify::classify_all(field, 2, Relation::isomorphism, classify::Method::invariant,
                                            threads, caps.search_caps());
    row.isom_bruteforce = brute.classes.size();
    row.isom_invariant = invariant.classes.size();
    row.agree = brute.same_blocks(invariant);
    if (q <= 3) {
      auto viaGb = classify::classify_all(field, 2, Relation::isomorphism, classify::Method::groebner,
                                          threads, caps.search_caps());
      row.isom_groebner = viaGb.classes.size();
      row.agree = row.agree && brute.same_blocks(viaGb);
    }
    auto isot_inv = classify::classify_all(field, 2, Relation::isotopism, classify::Method::invariant,
                                           threads, caps.search_caps());
    row.isot_invariant = isot_inv.classes.size();
    if (q <= 3) {
      auto isot_brute = classify::classify_all(field, 2, Relation::isotopism, classify::Method::bruteforce,
                                               threads, caps.search_caps());
      row.isot_bruteforce = isot_brute.classes.size();
      row.agree = row.agree && isot_inv.same_blocks(isot_brute);
      auto strong = classify::classify_all(field, 2, Relation::strong_isotopism,
                                           classify::Method::bruteforce, threads, caps.search_caps());
      row.strong_bruteforce = strong.classes.size();
    }
    for (const auto& cls : brute.classes)
      row.representatives.push_back(text::algebra_literal(evo::algebra_at(field, 2, cls.representative_index)));
    row.ms = timer.ms();
    rows.push_back(std::move(row));
  }

  // Rank-one and axis family adjudication at q = 7, settled by witness or
  // exhaustion rather than any published listing.
  gf::Field f7 = gf::Field::make(7);
  auto sq_pair = search::find_witness(text::parse_algebra_literal(f7, 2, "1,0;1,0"),
                                      text::parse_algebra_literal(f7, 2, "1,0;2,0"), Relation::isomorphism);
  auto axis_pair = search::find_witness(text::parse_algebra_literal(f7, 2, "0,1;1,0"),
                                        text::parse_algebra_literal(f7, 2, "0,1;2,0"), Relation::isomorphism);
  std::vector<std::string> notes;
  notes.push_back(std::string("q=7: (e1,e1) ") + (sq_pair ? "~" : "!~") + " (e1,2e1) " +
                  (sq_pair ? "with witness F=" + text::matrix_literal(sq_pair->f)
                           : "after exhausting all 2016 invertible matrices") +
                  "; 2 is a square mod 7, so the rank-one diagonal family has exactly two classes, (e1,e1) and (e1,3e1).");
  notes.push_back(std::string("q=7: (e2,e1) ") + (axis_pair ? "~" : "!~") + " (e2,2e1) " +
                  (axis_pair ? "with witness F=" + text::matrix_literal(axis_pair->f)
                             : "after exhausting all 2016 invertible matrices") +
                  "; the family (e2,c*e1) splits into the classes c in {1,6} and c in {2,3,4,5}, represented by (e2,e1) and (e2,2e1).");

  if (format == Format::jsonl) {
    for (const auto& row : rows) {
      json rec{{"type", "tables_row"},
               {"q", row.q},
               {"isomorphism", json{{"bruteforce", row.isom_bruteforce}, {"invariant", row.isom_invariant}}},
               {"isotopism", json{{"invariant", row.isot_invariant}}},
               {"methods_agree", row.agree},
               {"representatives", row.representatives}};
      if (row.isom_groebner) rec["isomorphism"]["groebner"] = *row.isom_groebner;
      if (row.isot_bruteforce) rec["isotopism"]["bruteforce"] = *row.isot_bruteforce;
      if (row.strong_bruteforce) rec["strong_isotopism"] = json{{"bruteforce", *row.strong_bruteforce}};
      std::cout << rec.dump() << "\n";
      report_timing("tables q=" + std::to_string(row.q), row.ms);
    }
    for (const auto& note : notes) std::cout << json{{"type", "note"}, {"text", note}}.dump() << "\n";
    return kOk;
  }

  std::cout << "q  isom(brute/invariant/groebner)  isotopism(invariant/brute)  strong(brute)  agree  time\n";
  for (const auto& row : rows) {
    std::cout << row.q << "  " << row.isom_bruteforce << "/" << row.isom_invariant << "/"
              << (row.isom_groebner ? std::to_string(*row.isom_groebner) : std::string("-")) << "  "
              << row.isot_invariant << "/"
              << (row.isot_bruteforce ? std::to_string(*row.isot_bruteforce) : std::string("-")) << "  "
              << (row.strong_bruteforce ? std::to_string(*row.strong_bruteforce) : std::string("-")) << "  "
              << (row.agree ? "yes" : "NO") << "  " << row.ms << "ms\n";
  }
  std::cout << "\nisomorphism class representatives:\n";
  for (const auto& row : rows) {
    std::cout << "q=" << row.q << ":";
    for (const auto& rep : row.representatives) std::cout << " " << rep;
    std::cout << "\n";
  }
  std::cout << "\n";
  for (const auto& note : notes) std::cout << note << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of two-dimensional evolution algebras over small finite fields"};
  app.require_subcommand(1);

  FieldOpts fopts;
  CapOpts caps;
  std::uint32_t n = 2;
  std::string format_str = "table";
  std::string relation_str = "isomorphism";
  std::string method_str = "bruteforce";
  std::string order_str = "grevlex";
  std::string encoding_str = "power";
  std::string left, right, vars_csv, gens_str;
  bool members = false;
  bool field_eqs = true;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* cmd, bool with_field = true) {
    if (with_field) add_field_options(cmd, fopts);
    cmd->add_option("--format", format_str, "output format: table, json, csv")->capture_default_str();
    cmd->add_option("--threads", threads, "worker count (default: EVOCLASS_THREADS or hardware)");
    add_cap_options(cmd, caps);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list every evolution algebra in enumeration order");
  add_common(enumerate);
  enumerate->add_option("--n", n, "dimension")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "search a witness between two algebras");
  add_common(check);
  check->add_option("--n", n, "dimension")->capture_default_str();
  check->add_option("--left", left, "left algebra literal or @file")->required();
  check->add_option("--right", right, "right algebra literal or @file")->required();
  check->add_option("--relation", relation_str, "isomorphism, strong-isotopism, isotopism")->capture_default_str();

  CLI::App* classify_cmd = app.add_subcommand("classify", "partition all algebras into classes");
  add_common(classify_cmd);
  classify_cmd->add_option("--n", n, "dimension")->capture_default_str();
  classify_cmd->add_option("--relation", relation_str, "isomorphism, strong-isotopism, isotopism")->capture_default_str();
  classify_cmd->add_option("--method", method_str, "bruteforce, groebner, invariant")->capture_default_str();
  classify_cmd->add_option("--order", order_str, "grevlex or lex (groebner method)")->capture_default_str();
  classify_cmd->add_flag("--members", members, "include full member lists");

  CLI::App* count_maps = app.add_subcommand("count-maps", "count isomorphisms or isotopism triples");
  add_common(count_maps);
  count_maps->add_option("--n", n, "dimension")->capture_default_str();
  count_maps->add_option("--left", left, "left algebra literal or @file")->required();
  count_maps->add_option("--right", right, "right algebra literal or @file")->required();
  count_maps->add_option("--relation", relation_str, "isomorphism or isotopism")->capture_default_str();
  count_maps->add_option("--method", method_str, "groebner or exhaustive")->required();
  count_maps->add_option("--order", order_str, "grevlex or lex")->capture_default_str();
  count_maps->add_option("--det-encoding", encoding_str, "power or rabinowitsch")->capture_default_str();

  CLI::App* groebner = app.add_subcommand("groebner", "reduced basis of a user-supplied ideal (debug)");
  add_common(groebner);
  groebner->add_option("--vars", vars_csv, "comma-separated variable names")->required();
  groebner->add_option("--gens", gens_str, "semicolon-separated generator polynomials")->required();
  groebner->add_option("--order", order_str, "grevlex or lex")->capture_default_str();
  groebner->add_flag("--field-eqs,!--no-field-eqs", field_eqs, "append x^q - x for every variable (default on)");

  CLI::App* tables = app.add_subcommand("tables", "consolidated report for q in {2,3,5,7}");
  add_common(tables, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    Format format = parse_format(format_str);
    if (enumerate->parsed()) return cmd_enumerate(fopts, n, format, caps);
    if (check->parsed()) return cmd_check(fopts, n, left, right, relation_str, format, caps);
    if (classify_cmd->parsed())
      return cmd_classify(fopts, n, relation_str, method_str, order_str, format, members, threads, caps);
    if (count_maps->parsed())
      return cmd_count_maps(fopts, n, left, right, relation_str, method_str, order_str, encoding_str, format,
                            caps);
    if (groebner->parsed()) return cmd_groebner(fopts, vars_csv, gens_str, order_str, field_eqs, format, caps);
    if (tables->parsed()) return cmd_tables(format, threads, caps);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_resource_error(e.code()) ? kResource : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
