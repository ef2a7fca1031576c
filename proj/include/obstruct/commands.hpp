#pragma once

#include <optional>
#include <string>

#include "obstruct/report.hpp"

/// The result documents behind each CLI subcommand.  Each returns the
/// "result" member of the report envelope.
namespace obstruct::commands {

using report::Json;

Json splice(i64 a, i64 b, i64 c, i64 d, bool with_changemaker);

/// Rows for 1 <= a <= b with (2a+1)(2b+1) <= max_product, sorted by (a, b).
/// Rows are computed on `jobs` worker threads and merged in order.
Json census_2odd(i64 max_product, int jobs);

Json changemaker_enum(int length, i64 norm);
Json changemaker_embed(const GramMatrix& g, i64 p, bool all, bool symmetry_pruning = true);

Json em(i64 l, i64 m, i64 n, i64 p);

/// `bound_k` selects the comparison product for S (via S_k); Sk and Tk use
/// their own k.
Json density(const std::string& set, i64 limit, bool bound, int bound_k);

Json cable(const std::string& spec);

Json goeritz(const goeritz::CheckerboardGraph& g, int basepoint);

} // namespace obstruct::commands
