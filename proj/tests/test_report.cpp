#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "liehecke/errors.hpp"
#include "liehecke/report.hpp"

using namespace liehecke;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "liehecke");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("build_report for (7,2)")
{
    const VerificationReport rep = build_report(7, 2);
    CHECK(rep.passed());
    REQUIRE(rep.h.has_value());
    CHECK(*rep.h == 1);
    CHECK(rep.n_diff == 7);
    CHECK(rep.n_sum == 25);
    CHECK(rep.n_plus == 16);
    CHECK(rep.n_minus == 9);
    REQUIRE(rep.find("n_diff_closed_form") != nullptr);
    CHECK(rep.find("n_diff_closed_form")->status == Status::pass);
    // group too big for the default limit
    CHECK(rep.find("mackey_i")->status == Status::skipped);
    CHECK(rep.find("no_such_check") == nullptr);
}

TEST_CASE("build_report for p = 1 mod 4 and p = 3")
{
    const VerificationReport r5 = build_report(5, 2);
    CHECK(r5.passed());
    CHECK_FALSE(r5.h.has_value());
    CHECK(r5.n_diff == 0);
    CHECK(r5.find("mackey_infinity")->status == Status::pass);

    const VerificationReport r3 = build_report(3, 2);
    CHECK(r3.passed());
    CHECK(r3.n_plus == 1);
    CHECK(r3.n_minus == 0);

    CHECK_THROWS_AS(build_report(9, 2), InvalidInput);
    CHECK_THROWS_AS(build_report(7, 1), InvalidInput);
    CHECK_THROWS_AS(build_report(2, 2), InvalidInput);
}

TEST_CASE("document summary and JSON round trip")
{
    const ReportDocument doc = make_document({build_report(3, 2), build_report(7, 2)});
    std::size_t total = 0, passed = 0;
    for (const auto& e : doc.entries) {
        CHECK_FALSE(e.checks.empty());
        total += e.checks.size();
        for (const auto& c : e.checks)
            passed += c.status == Status::pass;
    }
    CHECK(doc.summary.total == total);
    CHECK(doc.summary.passed == passed);
    CHECK(doc.summary.failed == 0);

    const std::string text = to_json(doc);
    CHECK(to_json(document_from_json(text)) == text);

    const auto j = nlohmann::json::parse(text);
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["entries"][1]["n_diff"] == "7");
    CHECK(j["entries"][1]["h"] == "1");
    CHECK(j["generated_for"].size() == 2);
    CHECK_FALSE(j.contains("generated_at"));

    const auto j5 = nlohmann::json::parse(to_json(make_document({build_report(5, 2)})));
    CHECK(j5["entries"][0]["h"].is_null());
}

TEST_CASE("csv and text renderings")
{
    const ReportDocument doc = make_document({build_report(5, 2)});
    const std::string csv = to_csv(doc);
    CHECK(csv.rfind("p,r,name,status,lhs,rhs\n", 0) == 0);
    CHECK(csv.find("5,2,n_diff_closed_form,pass,0,0\n") != std::string::npos);
    CHECK(to_text(doc).find("n_diff_closed_form") != std::string::npos);
}

TEST_CASE("table rows")
{
    const auto rows = table_rows(11, 2);
    REQUIRE(rows.size() == 4);
    CHECK(rows_to_csv(rows) == "p,r,h,n_diff,n_sum,n_plus,n_minus,parity_ok\n"
                               "3,2,1,1,1,1,0,true\n"
                               "5,2,-,0,8,4,4,true\n"
                               "7,2,1,7,25,16,9,true\n"
                               "11,2,1,11,105,58,47,true\n");
    CHECK(table_rows(3, 2).size() == 1);
    CHECK_THROWS_AS(table_rows(2, 2), InvalidInput);

    // rows must agree with the full report on the formula columns
    const VerificationReport rep = build_report(7, 2);
    const TableRow row = table_row(7, 2);
    CHECK(row.n_plus == rep.n_plus);
    CHECK(row.n_minus == rep.n_minus);

    for (const auto& row : table_rows(31, 3))
        CHECK(row.parity_ok);
}

TEST_CASE("cli verify")
{
    const Run ok = run_cli({"verify", "--p", "7", "--r", "2", "--format", "json"});
    CHECK(ok.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(ok.out);
    CHECK(j["entries"][0]["n_diff"] == "7");
    CHECK(j["entries"][0]["n_sum"] == "25");
    CHECK(j["entries"][0]["h"] == "1");

    SUBCASE("deterministic and round-trips")
    {
        const Run again = run_cli({"verify", "--p", "7", "--r", "2", "--format", "json"});
        CHECK(again.out == ok.out);
        CHECK(to_json(document_from_json(ok.out)) == ok.out);
    }

    CHECK(run_cli({"verify", "--p", "5", "--r", "2"}).code == cli::kExitOk);
    // group too large to list; group checks are skipped rather than failing
    CHECK(run_cli({"verify", "--p", "7", "--r", "3"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", "--p", "9", "--r", "2"}).code == cli::kExitInvalidInput);
    CHECK(run_cli({"verify", "--p", "8"}).code == cli::kExitInvalidInput);
    CHECK(run_cli({"verify", "--p", "7", "--r", "1"}).code == cli::kExitInvalidInput);
    CHECK(run_cli({"verify", "--p", "7", "--format", "xml"}).code == cli::kExitInvalidInput);
    CHECK(run_cli({"verify"}).code == cli::kExitInvalidInput);
    CHECK(run_cli({}).code == cli::kExitInvalidInput);
    CHECK(run_cli({"bogus"}).code == cli::kExitInvalidInput);

    SUBCASE("nonresidue override")
    {
        const Run a = run_cli({"verify", "--p", "7", "--nonresidue", "5"});
        CHECK(a.code == cli::kExitOk);
        const Run bad = run_cli({"verify", "--p", "7", "--nonresidue", "2"});
        CHECK(bad.code == cli::kExitInvalidInput);
    }

    SUBCASE("timestamp only when asked")
    {
        const Run t = run_cli({"verify", "--p", "3", "--timestamp"});
        CHECK(nlohmann::json::parse(t.out).contains("generated_at"));
    }

    SUBCASE("--out writes the file")
    {
        const auto path = std::filesystem::temp_directory_path() / "liehecke_report_test.csv";
        const Run w = run_cli({"verify", "--p", "3", "--format", "csv", "--out", path.string()});
        CHECK(w.code == cli::kExitOk);
        CHECK(w.out.empty());
        std::ifstream f(path);
        std::stringstream s;
        s << f.rdbuf();
        CHECK(s.str().rfind("p,r,name,status,lhs,rhs", 0) == 0);
        std::filesystem::remove(path);
    }
}

TEST_CASE("cli table")
{
    const Run t = run_cli({"table", "--pmax", "11", "--r", "2"});
    CHECK(t.code == cli::kExitOk);
    CHECK(t.out.find("7,2,1,7,25,16,9,true\n") != std::string::npos);
    CHECK(t.out.find("11,2,1,11,105,58,47,true\n") != std::string::npos);

    const Run three = run_cli({"table", "--pmax", "3", "--r", "2"});
    CHECK(three.out == "p,r,h,n_diff,n_sum,n_plus,n_minus,parity_ok\n3,2,1,1,1,1,0,true\n");
    CHECK(run_cli({"table", "--pmax", "2"}).code == cli::kExitInvalidInput);

    const Run js = run_cli({"table", "--pmax", "7", "--format", "json"});
    CHECK(nlohmann::json::parse(js.out).size() == 3);
}

TEST_CASE("cli classnum")
{
    const Run a = run_cli({"classnum", "--p", "23"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out.rfind("h(-23) = 3\n", 0) == 0);
    CHECK(a.out.find("DISAGREES") == std::string::npos);
    CHECK(run_cli({"classnum", "--p", "7"}).out.rfind("h(-7) = 1\n", 0) == 0);
    CHECK(run_cli({"classnum", "--p", "13"}).code == cli::kExitInvalidInput);
    CHECK(run_cli({"classnum", "--p", "3"}).code == cli::kExitOk);
}
