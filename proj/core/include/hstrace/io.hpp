#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hstrace/chain.hpp"
#include "hstrace/group_ring.hpp"
#include "hstrace/verdict.hpp"

namespace hstrace {

enum class ReportFormat { Json, Text };

ReportFormat parse_format(std::string_view name);  // "json" | "text"

// Group descriptors:
//   {"kind":"table","size":n,"mul":[[...]]}
//   {"kind":"perm","degree":k,"generators":[[images]],"order_bound":b?}
//   {"kind":"fgabelian","free_rank":r,"invariant_factors":[...]}
// all with an optional "name". Validation errors carry the offending
// cell or generator.
GroupPtr parse_group(std::string_view json_text);
GroupPtr load_group(const std::filesystem::path& path);

// Matrix files: {"group": <descriptor or "ref">, "n": n, "entries": [[term-list]]}
// where a term is [coeff, element]; element is an index for finite backends
// and a coordinate array for fgabelian. A file without an embedded group
// needs `fallback`; an embedded group must structurally match a supplied
// fallback.
GroupRingMatrix parse_matrix(std::string_view json_text, GroupPtr fallback = nullptr);
GroupRingMatrix load_matrix(const std::filesystem::path& path, GroupPtr fallback = nullptr);

// Complex files: {"group": ..., "complex": [{"degree": i, "idempotent": <matrix>}]}
IdempotentComplex parse_complex(std::string_view json_text, GroupPtr fallback = nullptr);
IdempotentComplex load_complex(const std::filesystem::path& path,
                               GroupPtr fallback = nullptr);

// Class vector files: {"group": ..., "coefficients": [[coeff, element], ...]}
ClassVector parse_class_vector(std::string_view json_text, GroupPtr fallback = nullptr);
ClassVector load_class_vector(const std::filesystem::path& path,
                              GroupPtr fallback = nullptr);

// Reports. JSON is the contract; the text form mirrors its content.
// Output is byte-identical across runs for identical inputs.
std::string classes_report(const GroupPtr& group, ReportFormat format);
std::string qgroup_report(const GroupPtr& group, long long d, bool reduced,
                          ReportFormat format);
std::string trace_report(const GroupPtr& group, const GroupRingMatrix& m,
                         ReportFormat format);
std::string verdict_report(const GroupPtr& group, long long d, const Verdict& v,
                           ReportFormat format);

struct SurveyRow {
  std::string file;
  GroupPtr group;
  long long d = 0;
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  bool two_torsion = false;
};

SurveyRow survey_row(std::string file, const GroupPtr& group, long long d, bool reduced);
std::string survey_report(const std::vector<SurveyRow>& rows,
                          const std::vector<long long>& dims, bool reduced,
                          ReportFormat format);

}  // namespace hstrace
