#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slk/aggregate.hpp"

namespace slk {

enum class OutputFormat { Csv, Json };

struct ReportOptions {
    OutputFormat format = OutputFormat::Csv;
    /// When false, a generation timestamp header/field is added; on (the
    /// default) output depends only on the input.
    bool deterministic = true;
};

/// Sums table, one row per class/statistic: n,p,q,statistic,value
/// (q empty for knot classes).
void write_class_sums(std::ostream& out, const std::vector<ClassSum>& rows,
                      const ReportOptions& opt = {});

/// Verification reports with the fixed column order
/// claim_id,n,p,q,statistic,status,lhs,rhs,witness (p/q/lhs/rhs empty where
/// not applicable, i.e. skipped rows).
void write_reports(std::ostream& out, const std::vector<VerificationReport>& rows,
                   const ReportOptions& opt = {});

} // namespace slk
