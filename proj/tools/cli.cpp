#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "liehecke/errors.hpp"
#include "liehecke/report.hpp"

namespace liehecke::cli {

namespace {

std::string utc_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

void emit(const std::string& text, const std::string& out_file, std::ostream& out)
{
    if (out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f)
        throw InvalidInput("cannot open output file " + out_file);
    f << text;
}

std::string classnum_report(i64 p, const std::string& format, bool& agree)
{
    const std::vector<QuadForm> forms = reduced_forms(p);
    const BigInt h(static_cast<long>(forms.size()));
    std::optional<BigInt> dirichlet;
    std::optional<Rational> gross;
    if (p > 3) {
        dirichlet = class_number_dirichlet(p);
        gross = gross_identity_check(p).root_part;
    }
    agree = (!dirichlet || *dirichlet == h) && (!gross || *gross == Rational(h));

    if (format == "json") {
        nlohmann::ordered_json j;
        j["p"] = std::to_string(p);
        j["h"] = h.get_str();
        j["forms"] = nlohmann::ordered_json::array();
        for (const auto& f : forms)
            j["forms"].push_back(
                {std::to_string(f.a), std::to_string(f.b), std::to_string(f.c)});
        j["dirichlet"] = dirichlet ? nlohmann::ordered_json(dirichlet->get_str()) : nullptr;
        j["gross"] = gross ? nlohmann::ordered_json(gross->get_str()) : nullptr;
        j["agree"] = agree;
        return j.dump(2) + "\n";
    }
    std::ostringstream s;
    if (format == "csv") {
        s << "p,h,dirichlet,gross,agree\n"
          << p << "," << h << "," << (dirichlet ? dirichlet->get_str() : "-") << ","
          << (gross ? gross->get_str() : "-") << "," << (agree ? "true" : "false") << "\n";
        return s.str();
    }
    s << "h(-" << p << ") = " << h << "\n";
    s << "reduced forms:";
    for (const auto& f : forms)
        s << " (" << f.a << "," << f.b << "," << f.c << ")";
    s << "\n";
    if (dirichlet) {
        s << "dirichlet: " << *dirichlet << (*dirichlet == h ? " (agrees)" : " (DISAGREES)") << "\n";
        s << "gross:     " << *gross << (*gross == Rational(h) ? " (agrees)" : " (DISAGREES)")
          << "\n";
    } else {
        s << "dirichlet, gross: not applicable for p = 3\n";
    }
    return s.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of class-number identities for invariant characters of "
                 "sl_2(F_p)"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_file;
    i64 p = 0;
    int r = 2;
    i64 p_max = 0;
    bool deep = false;
    bool timestamp = false;
    std::optional<i64> nonresidue;
    const std::vector<std::string> formats = {"json", "csv", "text"};

    auto* verify = app.add_subcommand("verify", "Run every check for one (p, r)");
    verify->add_option("--p", p, "odd prime")->required();
    verify->add_option("--r", r, "level r >= 2")->capture_default_str();
    verify->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();
    verify->add_option("--out", out_file, "write the report to FILE");
    verify->add_flag("--deep", deep, "raise table and enumeration limits to the hard guard");
    verify->add_option("--nonresidue", nonresidue, "override the fixed quadratic nonresidue");
    verify->add_flag("--timestamp", timestamp, "record the generation time");

    std::string table_format = "csv";
    auto* table = app.add_subcommand("table", "Formula-level summary for all odd primes <= pmax");
    table->add_option("--pmax", p_max, "largest prime")->required();
    table->add_option("--r", r, "level r >= 2")->capture_default_str();
    table->add_option("--format", table_format)
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    table->add_option("--out", out_file, "write the table to FILE");

    std::string classnum_format = "text";
    auto* classnum = app.add_subcommand("classnum", "h(-p) by three methods");
    classnum->add_option("--p", p, "prime = 3 mod 4")->required();
    classnum->add_option("--format", classnum_format)
        ->check(CLI::IsMember(formats))
        ->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (*verify) {
            VerifyOptions options;
            options.nonresidue = nonresidue;
            options.deep = deep;
            ReportDocument doc = make_document({build_report(p, r, options)});
            if (timestamp)
                doc.generated_at = utc_now();
            const std::string text = format == "json"  ? to_json(doc)
                                     : format == "csv" ? to_csv(doc)
                                                       : to_text(doc);
            emit(text, out_file, out);
            return doc.summary.failed == 0 ? kExitOk : kExitCheckFailed;
        }
        if (*table) {
            const std::vector<TableRow> rows = table_rows(p_max, r);
            const std::string text = table_format == "json"  ? rows_to_json(rows)
                                     : table_format == "csv" ? rows_to_csv(rows)
                                                             : rows_to_text(rows);
            emit(text, out_file, out);
            for (const auto& row : rows)
                if (!row.parity_ok)
                    return kExitCheckFailed;
            return kExitOk;
        }
        if (*classnum) {
            bool agree = false;
            out << classnum_report(p, classnum_format, agree);
            return agree ? kExitOk : kExitCheckFailed;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ConsistencyError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

} // namespace liehecke::cli
