#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jackhyp/branching.hpp"
#include "jackhyp/domains.hpp"
#include "jackhyp/dunkl.hpp"
#include "jackhyp/hypergeo.hpp"
#include "jackhyp/jack.hpp"

namespace jackhyp {

/// Insertion-ordered so that serialized output is byte-stable.
using Json = nlohmann::ordered_json;

/// Shortest text that round-trips in the given working precision
/// (17 significant digits for double, 21 for extended).
std::string format_real(long double x, Precision prec);

Json to_json(const Scalar& x);
Json to_json(const Partition& p);
Json to_json(const DomainDescriptor& dom);
Json to_json(const SeriesResult& res, bool with_shells = false);
Json to_json(const SeriesParams& p);
Json to_json(const BranchingCertificate& c, Precision prec);
Json to_json(const DunklCheckRow& row);

/// {"partition": "2,1", "alpha": "2", "rank": 3, "coeffs": {"2,1": "1", ...}}
Json jack_table_json(const Partition& m, const Scalar& alpha, const SymmetricPoly& j);

/// Fixed CSV layouts. Each writer emits its header row first.
namespace csv {

inline constexpr const char* kVersion = "jackhyp-csv/1";

/// Quotes a field when it contains a comma, a quote or a newline.
std::string field(const std::string& s);

void certificates(std::ostream& out, const std::vector<BranchingCertificate>& certs, Precision prec);
void dunkl_rows(std::ostream& out, const std::vector<DunklCheckRow>& rows);
void shells(std::ostream& out, const SeriesResult& res);
void jack_table(std::ostream& out, const SymmetricPoly& j);
void descriptor(std::ostream& out, const DomainDescriptor& dom);

}  // namespace csv

}  // namespace jackhyp
