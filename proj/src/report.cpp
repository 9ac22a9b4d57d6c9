#include "liehecke/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "json.hpp"

#include "liehecke/cuspspace.hpp"
#include "liehecke/errors.hpp"
#include "liehecke/invchar.hpp"

namespace liehecke {

using json = nlohmann::ordered_json;

namespace {

/// Hard ceiling for --deep table-level checks (p <= 97).
constexpr std::size_t kDeepTableLimit = 1'000'000;

std::string str(i64 v)
{
    return std::to_string(v);
}

i64 next_nonresidue(i64 p, i64 after)
{
    for (i64 n = after + 1; n < p; ++n)
        if (legendre(n, p) == -1)
            return n;
    return after;
}

CheckEntry entry(std::string name, bool ok, std::string lhs, std::string rhs)
{
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs)};
}

CheckEntry skipped(std::string name, std::string why)
{
    return {std::move(name), Status::skipped, std::move(why), ""};
}

std::string pair_str(const Rational& a, const Rational& b)
{
    return "(" + a.get_str() + ", " + b.get_str() + ")";
}

CheckEntry orbit_check(i64 p, int r, i64 nonresidue)
{
    const OrbitInfo ou = orbit_and_centralizer(p, r, nilpotent_u(p));
    const OrbitInfo ov = orbit_and_centralizer(p, r, nilpotent_v(p, nonresidue));
    std::vector<char> mark(static_cast<std::size_t>(p * p * p), 0);
    bool disjoint = true;
    for (const auto& x : ou.orbit)
        mark[static_cast<std::size_t>(x.index(p))] = 1;
    for (const auto& x : ov.orbit) {
        auto& m = mark[static_cast<std::size_t>(x.index(p))];
        disjoint = disjoint && m == 0;
        m = 1;
    }
    // nonzero nilpotents: a^2 + bc = 0
    bool exhaustive = true;
    for (i64 i = 1; i < p * p * p; ++i) {
        const LieElt x = LieElt::from_index(p, i);
        const bool nilpotent = mod(x.a * x.a + x.b * x.c, p) == 0;
        exhaustive = exhaustive && (nilpotent == (mark[static_cast<std::size_t>(i)] == 1));
    }
    const i64 half = (p * p - 1) / 2;
    const i64 cent = 2 * p * ipow(p, static_cast<unsigned>(3 * (r - 1)));
    const bool ok = static_cast<i64>(ou.orbit.size()) == half &&
                    static_cast<i64>(ov.orbit.size()) == half && ou.centralizer_order == cent &&
                    ov.centralizer_order == cent && disjoint && exhaustive;
    return entry("nilpotent_orbits", ok,
                 "|O(u)|=" + str(static_cast<i64>(ou.orbit.size())) +
                     " |O(v)|=" + str(static_cast<i64>(ov.orbit.size())) +
                     " |C(u)|=" + str(ou.centralizer_order) + " |C(v)|=" +
                     str(ov.centralizer_order) + (disjoint ? " disjoint" : " overlapping") +
                     (exhaustive ? " exhaustive" : " incomplete"),
                 "|O|=" + str(half) + " |C|=" + str(cent) + " disjoint exhaustive");
}

CheckEntry mackey_entry(i64 p, int r, InertiaPoint j, std::size_t guard)
{
    static const char* names[] = {"mackey_i", "mackey_rho", "mackey_infinity"};
    const std::string name = names[static_cast<int>(j)];
    const MackeyResult res = mackey_check(p, r, j, guard);
    // |SL_2(Z/p^r)| / (p^3 |G_j|) when the intersections are trivial,
    // (p^2 - 1) p^(2(r-2)) / 2 for the cusp
    i64 expected = 0;
    const i64 sl2 = sl2_order(p, r);
    if (j == InertiaPoint::i)
        expected = sl2 / (p * p * p * 4);
    else if (j == InertiaPoint::rho)
        expected = sl2 / (p * p * p * 6);
    else
        expected = (p * p - 1) * ipow(p, static_cast<unsigned>(2 * (r - 2))) / 2;
    const bool ok = res.verdict.pass && static_cast<i64>(res.double_coset_count) == expected;
    return entry(name, ok, res.verdict.detail, str(expected) + " double cosets");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string opt_str(const std::optional<BigInt>& v)
{
    return v ? v->get_str() : "-";
}

json opt_json(const std::optional<BigInt>& v)
{
    return v ? json(v->get_str()) : json(nullptr);
}

Status status_from(const std::string& s)
{
    if (s == "pass")
        return Status::pass;
    if (s == "fail")
        return Status::fail;
    if (s == "skipped")
        return Status::skipped;
    throw InvalidInput("unknown check status '" + s + "'");
}

} // namespace

bool VerificationReport::passed() const
{
    for (const auto& c : checks)
        if (c.status == Status::fail)
            return false;
    return true;
}

const CheckEntry* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

VerificationReport build_report(i64 p, int r, const VerifyOptions& options)
{
    require_odd_prime(p);
    if (r < 2)
        throw InvalidInput("level r must be at least 2");
    const i64 nonres = options.nonresidue.value_or(fixed_nonresidue(p));
    require_nonresidue(nonres, p);

    const std::size_t table_limit = options.deep ? kDeepTableLimit : options.table_limit;
    const std::size_t group_limit = options.deep ? kSizeGuard : options.group_limit;
    const bool tables = static_cast<std::size_t>(p * p * p) <= table_limit;
    const std::string table_skip = "p^3 = " + str(p * p * p) + " exceeds the table limit";
    const i64 order = sl2_order(p, r);
    const bool groups = static_cast<std::size_t>(order) <= group_limit;
    const std::string group_skip =
        "|SL_2(Z/p^r)| = " + str(order) + " exceeds the enumeration limit";
    const bool three_mod_four = p % 4 == 3;

    VerificationReport rep;
    rep.p = p;
    rep.r = r;
    if (three_mod_four)
        rep.h = class_number_forms(p);

    // n+ - n-
    CheckEntry theorem = theorem_check(p, r, nonres);
    if (theorem.status == Status::pass)
        rep.n_diff = BigInt(theorem.lhs);
    rep.checks.push_back(theorem);

    const i64 alt = options.nonresidue ? fixed_nonresidue(p) : next_nonresidue(p, nonres);
    if (alt == nonres) {
        rep.checks.push_back(skipped("nonresidue_invariance", "only one nonresidue mod p"));
    } else {
        const CheckEntry other = theorem_check(p, r, alt);
        rep.checks.push_back(entry("nonresidue_invariance",
                                   other.status == theorem.status && other.lhs == theorem.lhs,
                                   "n_diff=" + theorem.lhs + " (nonresidue " + str(nonres) + ")",
                                   "n_diff=" + other.lhs + " (nonresidue " + str(alt) + ")"));
    }

    // class numbers
    if (three_mod_four && p > 3) {
        const GrossIdentity g = gross_identity_check(p);
        rep.checks.push_back(entry("gross_identity", g.pass, pair_str(g.rational_part, g.root_part),
                                   pair_str(make_rational(p - 1, 2), Rational(g.h))));
        const BigInt hd = class_number_dirichlet(p);
        rep.checks.push_back(
            entry("class_number_methods", hd == *rep.h, "forms " + rep.h->get_str(),
                  "dirichlet " + hd.get_str()));
    } else if (!three_mod_four) {
        const Verdict v = dirichlet_sum_vanishes(p);
        rep.checks.push_back(skipped("gross_identity", "p = 1 mod 4"));
        rep.checks.push_back(entry("class_number_methods", v.pass, v.detail, "sum k (k/p) = 0"));
    } else {
        rep.checks.push_back(skipped("gross_identity", "p = 3"));
        rep.checks.push_back(skipped("class_number_methods", "p = 3"));
    }

    // n+ + n-
    rep.n_sum = mult_sum_closed_form(p, r);
    const bool odd = mpz_odd_p(rep.n_sum.get_mpz_t()) != 0;
    rep.checks.push_back(entry("n_sum_parity", odd == three_mod_four,
                               rep.n_sum.get_str() + (odd ? " odd" : " even"),
                               three_mod_four ? "odd (p = 3 mod 4)" : "even (p = 1 mod 4)"));
    if (tables) {
        try {
            const SumSpaceChar s = chi_S(p, r);
            rep.checks.push_back(entry("chi_S_degree", true, s.table.degree().to_string(),
                                       BigInt(2 * dim_cusp(p, r)).get_str()));
            const MultSum m = mult_sum(s, nonres);
            rep.checks.push_back(entry("n_sum_inner_product", m.agrees(),
                                       "<chi_S,psi_u>=" + m.via_u.get_str() +
                                           " <chi_S,psi_v>=" + m.via_v.get_str(),
                                       m.closed_form.get_str()));
        } catch (const ConsistencyError& e) {
            rep.checks.push_back(entry("chi_S_degree", false, e.what(),
                                       BigInt(2 * dim_cusp(p, r)).get_str()));
        }
        const Verdict collapse = check_gauss_collapse(p, nonres);
        rep.checks.push_back(entry("gauss_collapse", collapse.pass, collapse.detail,
                                   "(N+ - N-)(X) = legendre(b(X)) sqrt_star"));
        rep.checks.push_back(orbit_check(p, r, nonres));
    } else {
        for (const char* name :
             {"chi_S_degree", "n_sum_inner_product", "gauss_collapse", "nilpotent_orbits"})
            rep.checks.push_back(skipped(name, table_skip));
    }

    if (groups) {
        for (InertiaPoint j : {InertiaPoint::i, InertiaPoint::rho, InertiaPoint::infinity})
            rep.checks.push_back(mackey_entry(p, r, j, group_limit));
    } else {
        for (const char* name : {"mackey_i", "mackey_rho", "mackey_infinity"})
            rep.checks.push_back(skipped(name, group_skip));
    }

    // group level
    if (three_mod_four && p > 3) {
        try {
            const CorollaryQuantities c = corollary_quantities(p, r);
            rep.checks.push_back(entry("group_level_difference", c.diff_group_level == c.expected,
                                       c.diff_group_level.get_str(), c.expected.get_str()));
            rep.checks.push_back(entry("single_pair_parity", c.parity_obstruction.pass,
                                       c.parity_obstruction.detail, "h(-p) odd"));
        } catch (const ConsistencyError& e) {
            rep.checks.push_back(entry("group_level_difference", false, e.what(), ""));
        }
    } else {
        rep.checks.push_back(skipped("group_level_difference", "needs p > 3, p = 3 mod 4"));
        rep.checks.push_back(skipped("single_pair_parity", "needs p > 3, p = 3 mod 4"));
    }

    if (theorem.status == Status::pass) {
        try {
            const Multiplicities m = solve_multiplicities(rep.n_sum, rep.n_diff);
            rep.n_plus = m.n_plus;
            rep.n_minus = m.n_minus;
            rep.checks.push_back(entry("solve_multiplicities", true,
                                       "(" + m.n_plus.get_str() + ", " + m.n_minus.get_str() + ")",
                                       "nonnegative integers"));
        } catch (const ConsistencyError& e) {
            rep.checks.push_back(entry("solve_multiplicities", false, e.what(),
                                       "nonnegative integers"));
        }
    } else {
        rep.checks.push_back(entry("solve_multiplicities", false, "n_diff unavailable",
                                   "nonnegative integers"));
    }
    return rep;
}

ReportDocument make_document(std::vector<VerificationReport> entries)
{
    ReportDocument doc;
    for (const auto& e : entries) {
        doc.generated_for.emplace_back(e.p, e.r);
        for (const auto& c : e.checks) {
            ++doc.summary.total;
            if (c.status == Status::pass)
                ++doc.summary.passed;
            else if (c.status == Status::fail)
                ++doc.summary.failed;
        }
    }
    doc.entries = std::move(entries);
    return doc;
}

std::string to_json(const ReportDocument& doc)
{
    json j;
    j["schema_version"] = doc.schema_version;
    if (doc.generated_at)
        j["generated_at"] = *doc.generated_at;
    j["generated_for"] = json::array();
    for (const auto& [p, r] : doc.generated_for)
        j["generated_for"].push_back({{"p", str(p)}, {"r", str(r)}});
    j["entries"] = json::array();
    for (const auto& e : doc.entries) {
        json je;
        je["p"] = str(e.p);
        je["r"] = str(e.r);
        je["h"] = opt_json(e.h);
        je["n_diff"] = e.n_diff.get_str();
        je["n_sum"] = e.n_sum.get_str();
        je["n_plus"] = e.n_plus.get_str();
        je["n_minus"] = e.n_minus.get_str();
        je["checks"] = json::array();
        for (const auto& c : e.checks)
            je["checks"].push_back(
                {{"name", c.name}, {"status", to_string(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        j["entries"].push_back(std::move(je));
    }
    j["summary"] = {{"total", std::to_string(doc.summary.total)},
                    {"passed", std::to_string(doc.summary.passed)},
                    {"failed", std::to_string(doc.summary.failed)}};
    return j.dump(2) + "\n";
}

ReportDocument document_from_json(const std::string& text)
{
    const json j = json::parse(text);
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (j.contains("generated_at"))
        doc.generated_at = j.at("generated_at").get<std::string>();
    for (const auto& g : j.at("generated_for"))
        doc.generated_for.emplace_back(std::stoll(g.at("p").get<std::string>()),
                                       std::stoi(g.at("r").get<std::string>()));
    for (const auto& je : j.at("entries")) {
        VerificationReport e;
        e.p = std::stoll(je.at("p").get<std::string>());
        e.r = std::stoi(je.at("r").get<std::string>());
        if (!je.at("h").is_null())
            e.h = BigInt(je.at("h").get<std::string>());
        e.n_diff = BigInt(je.at("n_diff").get<std::string>());
        e.n_sum = BigInt(je.at("n_sum").get<std::string>());
        e.n_plus = BigInt(je.at("n_plus").get<std::string>());
        e.n_minus = BigInt(je.at("n_minus").get<std::string>());
        for (const auto& jc : je.at("checks"))
            e.checks.push_back({jc.at("name").get<std::string>(),
                                status_from(jc.at("status").get<std::string>()),
                                jc.at("lhs").get<std::string>(), jc.at("rhs").get<std::string>()});
        doc.entries.push_back(std::move(e));
    }
    const auto& s = j.at("summary");
    doc.summary = {std::stoul(s.at("total").get<std::string>()),
                   std::stoul(s.at("passed").get<std::string>()),
                   std::stoul(s.at("failed").get<std::string>())};
    return doc;
}

std::string to_text(const ReportDocument& doc)
{
    std::ostringstream out;
    for (const auto& e : doc.entries) {
        out << "p = " << e.p << ", r = " << e.r << "\n";
        out << "  h(-p) = " << opt_str(e.h) << "  n+ - n- = " << e.n_diff
            << "  n+ + n- = " << e.n_sum << "  n+ = " << e.n_plus << "  n- = " << e.n_minus
            << "\n";
        for (const auto& c : e.checks) {
            std::string tag = "[" + to_string(c.status) + "]";
            tag.resize(10, ' ');
            out << "  " << tag << c.name << ": " << c.lhs;
            if (!c.rhs.empty())
                out << "  |  " << c.rhs;
            out << "\n";
        }
    }
    out << "summary: " << doc.summary.total << " checks, " << doc.summary.passed << " passed, "
        << doc.summary.failed << " failed, "
        << doc.summary.total - doc.summary.passed - doc.summary.failed << " skipped\n";
    return out.str();
}

std::string to_csv(const ReportDocument& doc)
{
    std::ostringstream out;
    out << "p,r,name,status,lhs,rhs\n";
    for (const auto& e : doc.entries)
        for (const auto& c : e.checks)
            out << e.p << "," << e.r << "," << csv_field(c.name) << "," << to_string(c.status)
                << "," << csv_field(c.lhs) << "," << csv_field(c.rhs) << "\n";
    return out.str();
}

TableRow table_row(i64 p, int r)
{
    require_odd_prime(p);
    if (r < 2)
        throw InvalidInput("level r must be at least 2");
    TableRow row;
    row.p = p;
    row.r = r;
    if (p % 4 == 3)
        row.h = class_number_forms(p);
    row.n_diff = n_diff_formula(p, r).value;
    row.n_sum = mult_sum_closed_form(p, r);
    const Multiplicities m = solve_multiplicities(row.n_sum, row.n_diff);
    row.n_plus = m.n_plus;
    row.n_minus = m.n_minus;
    row.parity_ok = (mpz_odd_p(row.n_sum.get_mpz_t()) != 0) == (p % 4 == 3);
    return row;
}

std::vector<TableRow> table_rows(i64 p_max, int r)
{
    if (p_max < 3)
        throw InvalidInput("pmax must be at least 3");
    std::vector<TableRow> rows;
    for (i64 p = 3; p <= p_max; p += 2)
        if (is_prime(p))
            rows.push_back(table_row(p, r));
    return rows;
}

std::string rows_to_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "p,r,h,n_diff,n_sum,n_plus,n_minus,parity_ok\n";
    for (const auto& row : rows)
        out << row.p << "," << row.r << "," << opt_str(row.h) << "," << row.n_diff << ","
            << row.n_sum << "," << row.n_plus << "," << row.n_minus << ","
            << (row.parity_ok ? "true" : "false") << "\n";
    return out.str();
}

std::string rows_to_json(const std::vector<TableRow>& rows)
{
    json j = json::array();
    for (const auto& row : rows)
        j.push_back({{"p", str(row.p)},
                     {"r", str(row.r)},
                     {"h", opt_json(row.h)},
                     {"n_diff", row.n_diff.get_str()},
                     {"n_sum", row.n_sum.get_str()},
                     {"n_plus", row.n_plus.get_str()},
                     {"n_minus", row.n_minus.get_str()},
                     {"parity_ok", row.parity_ok}});
    return j.dump(2) + "\n";
}

std::string rows_to_text(const std::vector<TableRow>& rows)
{
    std::vector<std::array<std::string, 8>> cells;
    cells.push_back({"p", "r", "h", "n_diff", "n_sum", "n_plus", "n_minus", "parity_ok"});
    for (const auto& row : rows)
        cells.push_back({str(row.p), str(row.r), opt_str(row.h), row.n_diff.get_str(),
                         row.n_sum.get_str(), row.n_plus.get_str(), row.n_minus.get_str(),
                         row.parity_ok ? "true" : "false"});
    std::array<std::size_t, 8> width{};
    for (const auto& line : cells)
        for (std::size_t i = 0; i < 8; ++i)
            width[i] = std::max(width[i], line[i].size());
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < 8; ++i)
            out << std::string(width[i] - line[i].size(), ' ') << line[i] << (i + 1 < 8 ? " " : "\n");
    }
    return out.str();
}

} // namespace liehecke
