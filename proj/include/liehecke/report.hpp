#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liehecke/heckeverify.hpp"
#include "liehecke/modmat.hpp"

namespace liehecke {

inline constexpr const char* kSchemaVersion = "1.0";

struct VerifyOptions
{
    /// Replaces the smallest nonresidue throughout when set.
    std::optional<i64> nonresidue;
    /// Raise the table and group limits to the hard guards.
    bool deep = false;
    /// Character tables are built only when p^3 is at most this.
    std::size_t table_limit = 30'000;
    /// Groups are enumerated only when |SL_2(Z/p^r)| is at most this.
    std::size_t group_limit = 20'000;
};

struct VerificationReport
{
    i64 p = 0;
    int r = 0;
    std::optional<BigInt> h; // absent for p = 1 mod 4
    BigInt n_diff;
    BigInt n_sum;
    BigInt n_plus;
    BigInt n_minus;
    std::vector<CheckEntry> checks;

    bool passed() const;
    const CheckEntry* find(const std::string& name) const;
};

/// Runs every check that applies to (p, r). Throws InvalidInput for bad
/// parameters; failed identities become `fail` entries.
VerificationReport build_report(i64 p, int r, const VerifyOptions& options = {});

struct Summary
{
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    friend bool operator==(const Summary&, const Summary&) = default;
};

struct ReportDocument
{
    std::string schema_version = kSchemaVersion;
    std::vector<std::pair<i64, int>> generated_for;
    std::vector<VerificationReport> entries;
    Summary summary;
    std::optional<std::string> generated_at;
};

/// Summary counts checks across all entries.
ReportDocument make_document(std::vector<VerificationReport> entries);

std::string to_json(const ReportDocument& doc);
ReportDocument document_from_json(const std::string& text);
std::string to_text(const ReportDocument& doc);
/// One row per check: p,r,name,status,lhs,rhs.
std::string to_csv(const ReportDocument& doc);

/// Formula-only summary row (no group enumeration, no character tables).
struct TableRow
{
    i64 p = 0;
    int r = 0;
    std::optional<BigInt> h;
    BigInt n_diff;
    BigInt n_sum;
    BigInt n_plus;
    BigInt n_minus;
    bool parity_ok = false;
};

TableRow table_row(i64 p, int r);
/// One row per odd prime p <= p_max.
std::vector<TableRow> table_rows(i64 p_max, int r);

std::string rows_to_csv(const std::vector<TableRow>& rows);
std::string rows_to_json(const std::vector<TableRow>& rows);
std::string rows_to_text(const std::vector<TableRow>& rows);

} // namespace liehecke
