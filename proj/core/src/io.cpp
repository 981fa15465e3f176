#include "hstrace/io.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hstrace/format.hpp"
#include "hstrace/qcalc.hpp"

namespace hstrace {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": invalid JSON: " + e.what());
  }
}

Int int_from_json(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError(ctx + ": not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  throw ValidationError(ctx + ": expected an integer (number or decimal string)");
}

json int_to_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

std::size_t size_from_json(const json& j, const std::string& ctx) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ValidationError(ctx + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& require(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(ctx + ": missing field \"" + key + "\"");
  return *it;
}

GroupPtr parse_group_json(const json& j) {
  if (!j.is_object()) throw ValidationError("group descriptor: expected an object");
  std::string kind = require(j, "kind", "group descriptor").get<std::string>();
  std::string name;
  if (j.contains("name")) name = j.at("name").get<std::string>();

  if (kind == "table") {
    std::size_t size = size_from_json(require(j, "size", "table group"), "table group: size");
    const json& mul = require(j, "mul", "table group");
    if (!mul.is_array() || mul.size() != size)
      throw ValidationError("table group: mul must be a " + std::to_string(size) + "x" +
                            std::to_string(size) + " array");
    std::vector<std::vector<std::uint32_t>> rows(size);
    for (std::size_t i = 0; i < size; ++i) {
      if (!mul[i].is_array())
        throw ValidationError("table group: mul[" + std::to_string(i) + "] must be an array");
      rows[i].reserve(mul[i].size());
      for (std::size_t k = 0; k < mul[i].size(); ++k)
        rows[i].push_back(static_cast<std::uint32_t>(size_from_json(
            mul[i][k],
            "table group: mul[" + std::to_string(i) + "][" + std::to_string(k) + "]")));
    }
    return Group::from_table(std::move(rows), std::move(name));
  }
  if (kind == "perm") {
    std::size_t degree =
        size_from_json(require(j, "degree", "perm group"), "perm group: degree");
    const json& gens = require(j, "generators", "perm group");
    if (!gens.is_array()) throw ValidationError("perm group: generators must be an array");
    std::vector<std::vector<std::uint32_t>> generators;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      if (!gens[gi].is_array())
        throw ValidationError("perm group: generator " + std::to_string(gi) +
                              " must be an array of images");
      std::vector<std::uint32_t> p;
      p.reserve(gens[gi].size());
      for (std::size_t k = 0; k < gens[gi].size(); ++k)
        p.push_back(static_cast<std::uint32_t>(
            size_from_json(gens[gi][k], "perm group: generator " + std::to_string(gi) +
                                            " image [" + std::to_string(k) + "]")));
      generators.push_back(std::move(p));
    }
    std::size_t bound = Group::kDefaultOrderBound;
    if (j.contains("order_bound"))
      bound = size_from_json(j.at("order_bound"), "perm group: order_bound");
    return Group::from_permutations(degree, std::move(generators), bound, std::move(name));
  }
  if (kind == "fgabelian") {
    std::size_t free_rank =
        size_from_json(require(j, "free_rank", "fgabelian group"), "fgabelian: free_rank");
    const json& fac = require(j, "invariant_factors", "fgabelian group");
    if (!fac.is_array())
      throw ValidationError("fgabelian group: invariant_factors must be an array");
    std::vector<Int> factors;
    for (std::size_t i = 0; i < fac.size(); ++i)
      factors.push_back(
          int_from_json(fac[i], "fgabelian group: invariant_factors[" + std::to_string(i) + "]"));
    return Group::fg_abelian(free_rank, std::move(factors), Group::kDefaultOrderBound,
                             std::move(name));
  }
  throw ValidationError("group descriptor: unknown kind \"" + kind +
                        "\" (expected table, perm, or fgabelian)");
}

bool same_descriptor(const Group& a, const Group& b) {
  if (a.backend() != b.backend()) return false;
  switch (a.backend()) {
    case BackendKind::Table:
      return a.table_flat() == b.table_flat();
    case BackendKind::Perm:
      return a.degree() == b.degree() && a.generators() == b.generators();
    case BackendKind::FgAbelian:
      return a.free_rank() == b.free_rank() &&
             a.invariant_factors() == b.invariant_factors();
  }
  return false;
}

// Resolve the "group" field of a data file against an optional fallback
// group supplied on the command line. When both are present they must
// describe the same group; the fallback pointer wins so that downstream
// values share one Group instance.
GroupPtr resolve_group(const json& j, const GroupPtr& fallback, const std::string& what) {
  auto it = j.find("group");
  if (it == j.end() || (it->is_string() && it->get<std::string>() == "ref")) {
    if (!fallback)
      throw ValidationError(what + ": no embedded group and no --group supplied");
    return fallback;
  }
  GroupPtr parsed = parse_group_json(*it);
  if (fallback) {
    if (!same_descriptor(*parsed, *fallback))
      throw ValidationError(what + ": embedded group differs from the supplied group");
    return fallback;
  }
  return parsed;
}

GroupElement elem_from_json(const GroupPtr& g, const json& j, const std::string& ctx) {
  if (g->backend() == BackendKind::FgAbelian) {
    if (!j.is_array())
      throw ValidationError(ctx + ": fgabelian element must be a coordinate array");
    std::vector<Int> coords;
    coords.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
      coords.push_back(int_from_json(j[k], ctx + ": coordinate " + std::to_string(k)));
    return g->canonical(GroupElement::from_coords(std::move(coords)));
  }
  return g->canonical(
      GroupElement::at_index(static_cast<std::uint32_t>(size_from_json(j, ctx))));
}

json elem_to_json(const GroupElement& e) {
  if (e.is_index()) return e.index();
  json out = json::array();
  for (const Int& c : e.coords()) out.push_back(int_to_json(c));
  return out;
}

json class_vector_to_json(const ClassVector& v) {
  json out = json::array();
  for (const auto& [rep, c] : v.coefficients())
    out.push_back(json::array({int_to_json(c), elem_to_json(rep)}));
  return out;
}

GroupRingElement ring_elem_from_json(const GroupPtr& g, const json& j,
                                     const std::string& ctx) {
  if (!j.is_array()) throw ValidationError(ctx + ": expected a term list");
  GroupRingElement out(g);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const json& term = j[t];
    if (!term.is_array() || term.size() != 2)
      throw ValidationError(ctx + ": term " + std::to_string(t) +
                            " must be [coeff, element]");
    Int coeff = int_from_json(term[0], ctx + ": term " + std::to_string(t) + " coefficient");
    out.add_term(elem_from_json(g, term[1], ctx + ": term " + std::to_string(t) + " element"),
                 coeff);
  }
  return out;
}

GroupRingMatrix matrix_from_json(const json& j, const GroupPtr& fallback,
                                 const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + ": expected an object");
  GroupPtr g = resolve_group(j, fallback, what);
  std::size_t n = size_from_json(require(j, "n", what), what + ": n");
  const json& entries = require(j, "entries", what);
  if (!entries.is_array() || entries.size() != n)
    throw ValidationError(what + ": entries must be an array of " + std::to_string(n) +
                          " rows");
  GroupRingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!entries[i].is_array() || entries[i].size() != n)
      throw ValidationError(what + ": entries[" + std::to_string(i) + "] must have " +
                            std::to_string(n) + " columns");
    for (std::size_t k = 0; k < n; ++k)
      m.at(i, k) = ring_elem_from_json(
          g, entries[i][k],
          what + ": entries[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

json group_summary(const GroupPtr& g) {
  json out;
  switch (g->backend()) {
    case BackendKind::Table:
      out["kind"] = "table";
      break;
    case BackendKind::Perm:
      out["kind"] = "perm";
      break;
    case BackendKind::FgAbelian:
      out["kind"] = "fgabelian";
      break;
  }
  if (!g->name().empty()) out["name"] = g->name();
  if (g->is_finite())
    out["order"] = int_to_json(g->order());
  else
    out["order"] = "infinite";
  switch (g->backend()) {
    case BackendKind::Table:
      out["size"] = g->order().convert_to<std::size_t>();
      break;
    case BackendKind::Perm:
      out["degree"] = g->degree();
      break;
    case BackendKind::FgAbelian: {
      out["free_rank"] = g->free_rank();
      json fac = json::array();
      for (const Int& f : g->invariant_factors()) fac.push_back(int_to_json(f));
      out["invariant_factors"] = fac;
      break;
    }
  }
  return out;
}

std::string group_text_line(const GroupPtr& g) {
  std::string out = "kind=";
  switch (g->backend()) {
    case BackendKind::Table:
      out += "table";
      break;
    case BackendKind::Perm:
      out += "perm";
      break;
    case BackendKind::FgAbelian:
      out += "fgabelian";
      break;
  }
  if (!g->name().empty()) out += " name=" + g->name();
  out += " order=" + (g->is_finite() ? g->order().str() : std::string("infinite"));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* role_name(QLedgerEntry::Role r) {
  switch (r) {
    case QLedgerEntry::Role::SelfFree:
      return "self-free";
    case QLedgerEntry::Role::SelfOrder2:
      return "self-order2";
    default:
      return "paired";
  }
}

std::string torsion_text(const std::vector<Int>& torsion) {
  std::string out = "[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ",";
    out += torsion[i].str();
  }
  return out + "]";
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  throw ValidationError("unknown format \"" + std::string(name) +
                        "\" (expected json or text)");
}

GroupPtr parse_group(std::string_view json_text) {
  return parse_group_json(parse_json(json_text, "group descriptor"));
}

GroupPtr load_group(const std::filesystem::path& path) {
  return parse_group(read_file(path));
}

GroupRingMatrix parse_matrix(std::string_view json_text, GroupPtr fallback) {
  return matrix_from_json(parse_json(json_text, "matrix"), fallback, "matrix");
}

GroupRingMatrix load_matrix(const std::filesystem::path& path, GroupPtr fallback) {
  return parse_matrix(read_file(path), std::move(fallback));
}

IdempotentComplex parse_complex(std::string_view json_text, GroupPtr fallback) {
  json j = parse_json(json_text, "complex");
  if (!j.is_object()) throw ValidationError("complex: expected an object");
  GroupPtr g = resolve_group(j, fallback, "complex");
  const json& degrees = require(j, "complex", "complex");
  if (!degrees.is_array()) throw ValidationError("complex: \"complex\" must be an array");
  std::vector<std::pair<std::size_t, GroupRingMatrix>> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const json& entry = degrees[i];
    const std::string ctx = "complex[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw ValidationError(ctx + ": expected an object");
    std::size_t degree = size_from_json(require(entry, "degree", ctx), ctx + ": degree");
    GroupRingMatrix m =
        matrix_from_json(require(entry, "idempotent", ctx), g, ctx + ": idempotent");
    out.emplace_back(degree, std::move(m));
  }
  return IdempotentComplex::create(g, std::move(out));
}

IdempotentComplex load_complex(const std::filesystem::path& path, GroupPtr fallback) {
  return parse_complex(read_file(path), std::move(fallback));
}

ClassVector parse_class_vector(std::string_view json_text, GroupPtr fallback) {
  json j = parse_json(json_text, "class vector");
  if (!j.is_object()) throw ValidationError("class vector: expected an object");
  GroupPtr g = resolve_group(j, fallback, "class vector");
  const json& coeffs = require(j, "coefficients", "class vector");
  if (!coeffs.is_array())
    throw ValidationError("class vector: coefficients must be an array");
  ClassVector v(g);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const json& term = coeffs[i];
    const std::string ctx = "class vector: coefficients[" + std::to_string(i) + "]";
    if (!term.is_array() || term.size() != 2)
      throw ValidationError(ctx + " must be [coeff, element]");
    Int c = int_from_json(term[0], ctx + " coefficient");
    v.add(elem_from_json(g, term[1], ctx + " element"), c);
  }
  return v;
}

ClassVector load_class_vector(const std::filesystem::path& path, GroupPtr fallback) {
  return parse_class_vector(read_file(path), std::move(fallback));
}

std::string classes_report(const GroupPtr& group, ReportFormat format) {
  const auto& classes = group->conjugacy_classes();
  if (format == ReportFormat::Json) {
    json out;
    out["command"] = "classes";
    out["group"] = group_summary(group);
    out["class_count"] = classes.size();
    json list = json::array();
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
      json row;
      row["index"] = ci;
      row["representative"] = elem_to_json(classes[ci].representative);
      row["size"] = classes[ci].size;
      row["inverse_class"] = group->inverse_class_index(ci);
      list.push_back(std::move(row));
    }
    out["classes"] = std::move(list);
    return dump(out);
  }
  std::ostringstream os;
  os << "command: classes\n";
  os << "group: " << group_text_line(group) << "\n";
  os << "class_count: " << classes.size() << "\n";
  os << "classes:\n";
  for (std::size_t ci = 0; ci < classes.size(); ++ci)
    os << "  index=" << ci << " size=" << classes[ci].size
       << " representative=" << element_text(classes[ci].representative)
       << " inverse_class=" << group->inverse_class_index(ci) << "\n";
  return os.str();
}

std::string qgroup_report(const GroupPtr& group, long long d, bool reduced,
                          ReportFormat format) {
  QStructurePtr s = q_structure(group, d, reduced);
  const auto& classes = group->conjugacy_classes();
  const std::string structure = structure_string(s->free_rank(), s->torsion());
  if (format == ReportFormat::Json) {
    json out;
    out["command"] = "qgroup";
    out["group"] = group_summary(group);
    out["d"] = d;
    out["parity"] = s->odd() ? "odd" : "even";
    out["reduced"] = reduced;
    out["structure"] = structure;
    out["free_rank"] = s->free_rank();
    json tor = json::array();
    for (const Int& t : s->torsion()) tor.push_back(int_to_json(t));
    out["torsion"] = std::move(tor);
    json ledger = json::array();
    for (const QLedgerEntry& e : s->ledger()) {
      json row;
      row["class"] = e.class_index;
      row["representative"] = elem_to_json(classes[e.class_index].representative);
      row["role"] = role_name(e.role);
      row["partner"] = e.partner;
      row["sign"] = e.sign;
      row["generator"] = e.generator;
      row["dropped"] = e.dropped;
      ledger.push_back(std::move(row));
    }
    out["ledger"] = std::move(ledger);
    return dump(out);
  }
  std::ostringstream os;
  os << "command: qgroup\n";
  os << "group: " << group_text_line(group) << "\n";
  os << "d: " << d << "\n";
  os << "parity: " << (s->odd() ? "odd" : "even") << "\n";
  os << "reduced: " << (reduced ? "true" : "false") << "\n";
  os << "structure: " << structure << "\n";
  os << "free_rank: " << s->free_rank() << "\n";
  os << "torsion: " << torsion_text(s->torsion()) << "\n";
  os << "ledger:\n";
  for (const QLedgerEntry& e : s->ledger())
    os << "  class=" << e.class_index
       << " representative=" << element_text(classes[e.class_index].representative)
       << " role=" << role_name(e.role) << " partner=" << e.partner << " sign=" << e.sign
       << " generator=" << (e.generator ? "true" : "false")
       << " dropped=" << (e.dropped ? "true" : "false") << "\n";
  return os.str();
}

std::string trace_report(const GroupPtr& group, const GroupRingMatrix& m,
                         ReportFormat format) {
  ClassVector t = hs_trace(m);
  ClassVector reduced = reduce_trace(t);
  if (format == ReportFormat::Json) {
    json out;
    out["command"] = "trace";
    out["group"] = group_summary(group);
    out["n"] = m.size();
    out["trace"] = class_vector_to_json(t);
    out["reduced_trace"] = class_vector_to_json(reduced);
    out["augmentation"] = int_to_json(t.augmentation());
    return dump(out);
  }
  std::ostringstream os;
  os << "command: trace\n";
  os << "group: " << group_text_line(group) << "\n";
  os << "n: " << m.size() << "\n";
  os << "trace: " << class_vector_text(t) << "\n";
  os << "reduced_trace: " << class_vector_text(reduced) << "\n";
  os << "augmentation: " << t.augmentation().str() << "\n";
  return os.str();
}

std::string verdict_report(const GroupPtr& group, long long d, const Verdict& v,
                           ReportFormat format) {
  if (format == ReportFormat::Json) {
    json out;
    out["command"] = "verdict";
    out["group"] = group_summary(group);
    out["d"] = d;
    json hyp;
    hyp["homotopy_finite"] = v.homotopy_finite;
    hyp["bass_holds"] = v.bass_holds;
    hyp["bass_source"] = v.bass_source;
    if (v.reduced_char)
      hyp["reduced_characteristic"] = class_vector_to_json(*v.reduced_char);
    else
      hyp["reduced_characteristic"] = nullptr;
    hyp["reduced_characteristic_source"] = v.reduced_char_source;
    out["hypotheses"] = std::move(hyp);
    out["outcome"] = outcome_name(v.outcome);
    json cert = json::array();
    for (const CertificateStep& s : v.certificate) {
      json step;
      step["rule"] = s.rule;
      step["detail"] = s.detail;
      cert.push_back(std::move(step));
    }
    out["certificate"] = std::move(cert);
    return dump(out);
  }
  std::ostringstream os;
  os << "command: verdict\n";
  os << "group: " << group_text_line(group) << "\n";
  os << "d: " << d << "\n";
  os << "homotopy_finite: " << (v.homotopy_finite ? "true" : "false") << "\n";
  os << "bass_holds: " << (v.bass_holds ? "true" : "false") << " (" << v.bass_source
     << ")\n";
  os << "reduced_characteristic: "
     << (v.reduced_char ? class_vector_text(*v.reduced_char) : std::string("unknown"))
     << " (" << v.reduced_char_source << ")\n";
  os << "outcome: " << outcome_name(v.outcome) << "\n";
  os << "certificate:\n";
  for (std::size_t i = 0; i < v.certificate.size(); ++i)
    os << "  " << i + 1 << ". " << v.certificate[i].rule << ": "
       << v.certificate[i].detail << "\n";
  return os.str();
}

SurveyRow survey_row(std::string file, const GroupPtr& group, long long d, bool reduced) {
  QStructurePtr s = q_structure(group, d, reduced);
  SurveyRow row;
  row.file = std::move(file);
  row.group = group;
  row.d = d;
  row.free_rank = s->free_rank();
  row.torsion = s->torsion();
  row.two_torsion = has_two_torsion(*s);
  return row;
}

std::string survey_report(const std::vector<SurveyRow>& rows,
                          const std::vector<long long>& dims, bool reduced,
                          ReportFormat format) {
  if (format == ReportFormat::Json) {
    json out;
    out["command"] = "survey";
    json dj = json::array();
    for (long long d : dims) dj.push_back(d);
    out["dims"] = std::move(dj);
    out["reduced"] = reduced;
    json list = json::array();
    for (const SurveyRow& r : rows) {
      json row;
      row["file"] = r.file;
      row["group"] = group_summary(r.group);
      row["d"] = r.d;
      row["structure"] = structure_string(r.free_rank, r.torsion);
      row["free_rank"] = r.free_rank;
      json tor = json::array();
      for (const Int& t : r.torsion) tor.push_back(int_to_json(t));
      row["torsion"] = std::move(tor);
      row["two_torsion"] = r.two_torsion;
      list.push_back(std::move(row));
    }
    out["rows"] = std::move(list);
    return dump(out);
  }
  std::ostringstream os;
  os << "command: survey\n";
  os << "dims:";
  for (long long d : dims) os << " " << d;
  os << "\n";
  os << "reduced: " << (reduced ? "true" : "false") << "\n";

  std::vector<std::array<std::string, 6>> table;
  table.push_back({"file", "name", "order", "d", "structure", "two_torsion"});
  for (const SurveyRow& r : rows)
    table.push_back({r.file, r.group->name().empty() ? "-" : r.group->name(),
                     r.group->is_finite() ? r.group->order().str() : "infinite",
                     std::to_string(r.d), structure_string(r.free_rank, r.torsion),
                     r.two_torsion ? "true" : "false"});
  std::array<std::size_t, 6> width{};
  for (const auto& row : table)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : table) {
    for (std::size_t c = 0; c < 6; ++c) {
      os << row[c];
      if (c + 1 < 6) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hstrace
