#pragma once

// Output records and rendering: text for humans, CSV for spreadsheets,
// JSON for downstream tools. One top-level OutputRecord per invocation.

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "germain/bounds.hpp"
#include "germain/residues.hpp"
#include "germain/search.hpp"

namespace germain::report {

inline constexpr const char* kVersion = "1.0.0";

enum class Format { text, csv, json };

using json = nlohmann::ordered_json;

struct OutputRecord {
    std::string command;
    json parameters;
    json payload;
    std::string version = kVersion;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline json serialize(const OutputRecord& r) {
    return json{{"command", r.command},
                {"parameters", r.parameters},
                {"payload", r.payload},
                {"version", r.version}};
}

inline OutputRecord deserialize(const json& j) {
    return OutputRecord{j.at("command").get<std::string>(), j.at("parameters"),
                        j.at("payload"), j.at("version").get<std::string>()};
}

// --- payload encodings (residue lists always ascending) ---

inline json to_json(const ResidueSet& rs) {
    return json{{"p", rs.exponent()},
                {"theta", rs.modulus().value()},
                {"count", rs.members().size()},
                {"residues", rs.members()}};
}

inline json to_json(const SgtCertificate& c) {
    json j{{"p", c.p},
           {"theta", c.theta},
           {"nc_holds", c.nc_holds},
           {"p_not_residue_holds", c.p_not_residue_holds}};
    if (c.nc_witness)
        j["nc_witness"] = {c.nc_witness->first, c.nc_witness->second};
    if (c.p_residue_witness)
        j["p_residue_witness"] = *c.p_residue_witness;
    if (c.holds())
        j["consequence"] = c.consequence();
    return j;
}

inline SgtCertificate certificate_from_json(const json& j) {
    SgtCertificate c{j.at("p").get<std::uint64_t>(), j.at("theta").get<std::uint64_t>(),
                     j.at("nc_holds").get<bool>(), j.at("p_not_residue_holds").get<bool>(),
                     std::nullopt, std::nullopt};
    if (j.contains("nc_witness"))
        c.nc_witness = std::make_pair(j["nc_witness"][0].get<std::uint64_t>(),
                                      j["nc_witness"][1].get<std::uint64_t>());
    if (j.contains("p_residue_witness"))
        c.p_residue_witness = j["p_residue_witness"].get<std::uint64_t>();
    return c;
}

inline json to_json(const LegendreRow& row) {
    return json{{"p", row.p},
                {"N", row.n},
                {"theta", row.theta},
                {"residue_count", row.residues.size()},
                {"residues", row.residues},
                {"certificate", to_json(row.certificate)}};
}

inline json to_json(const TableResult& table) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(to_json(row));
    return json{{"rows", rows}, {"missing", table.missing}};
}

inline json to_json(const ScanReport& r) {
    return json{{"p", r.p},
                {"bound", r.bound},
                {"include_p_condition", r.include_p_condition},
                {"qualifying", r.qualifying},
                {"exhaustive", r.exhaustive}};
}

inline ScanReport scan_from_json(const json& j) {
    return ScanReport{j.at("p").get<std::uint64_t>(), j.at("bound").get<std::uint64_t>(),
                      j.at("include_p_condition").get<bool>(),
                      j.at("qualifying").get<std::vector<std::uint64_t>>(),
                      j.at("exhaustive").get<bool>()};
}

inline json to_json(const SizeBound& b) {
    return json{{"p", b.p},
                {"auxiliaries", b.auxiliaries},
                {"product", b.product.get_str()},
                {"min_max_solution", b.min_max_solution.get_str()},
                {"decimal_digits", b.decimal_digits}};
}

// --- rendering helpers ---

inline std::string join(const std::vector<std::uint64_t>& v, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

// RFC-style CSV quoting; our fields rarely need it but the contract does.
inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Legendre's +-r display convention: the sets are symmetric under
// negation, so each member r <= (theta-1)/2 stands for the pair {r, theta-r}.
inline std::string render_paired(const ResidueSet& rs) {
    std::vector<std::uint64_t> half;
    const std::uint64_t t = rs.modulus().value();
    for (std::uint64_t r : rs.members())
        if (r <= (t - 1) / 2) half.push_back(r);
    std::ostringstream os;
    for (std::size_t i = 0; i < half.size(); ++i) {
        if (i) os << ", ";
        os << "±" << half[i];
    }
    return os.str();
}

inline std::string render_residues(const ResidueSet& rs, Format fmt, bool paired = false) {
    switch (fmt) {
        case Format::json: {
            OutputRecord rec{"residues",
                             json{{"p", rs.exponent()}, {"theta", rs.modulus().value()}},
                             to_json(rs)};
            return serialize(rec).dump(2) + "\n";
        }
        case Format::csv: {
            std::ostringstream os;
            os << "p,theta,residue_count,residues\n";
            os << rs.exponent() << ',' << rs.modulus().value() << ',' << rs.members().size()
               << ',' << csv_quote(join(rs.members(), ";")) << '\n';
            return os.str();
        }
        case Format::text: {
            std::ostringstream os;
            os << "nonzero " << rs.exponent() << "-th power residues mod "
               << rs.modulus().value() << " (" << rs.members().size() << "): ";
            os << (paired ? render_paired(rs) : join(rs.members(), ", ")) << '\n';
            return os.str();
        }
    }
    return {};
}

inline std::string render_certificate(const SgtCertificate& c, Format fmt) {
    if (fmt == Format::json) {
        OutputRecord rec{"check", json{{"p", c.p}, {"theta", c.theta}}, to_json(c)};
        return serialize(rec).dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "p,theta,nc,p_not_residue,nc_witness,p_residue_witness\n";
        os << c.p << ',' << c.theta << ',' << (c.nc_holds ? "true" : "false") << ','
           << (c.p_not_residue_holds ? "true" : "false") << ',';
        if (c.nc_witness) os << c.nc_witness->first << ';' << c.nc_witness->second;
        os << ',';
        if (c.p_residue_witness) os << *c.p_residue_witness;
        os << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "p = " << c.p << ", theta = " << c.theta << '\n';
    os << "  no consecutive residues (NC): " << (c.nc_holds ? "holds" : "fails");
    if (c.nc_witness)
        os << "  [witness: " << c.nc_witness->first << ", " << c.nc_witness->second << "]";
    os << '\n';
    os << "  p not a p-th power residue:   " << (c.p_not_residue_holds ? "holds" : "fails");
    if (c.p_residue_witness) os << "  [witness: " << *c.p_residue_witness << " is a residue]";
    os << '\n';
    if (c.holds())
        os << "  => " << c.consequence() << '\n';
    return os.str();
}

inline std::string render_table(const TableResult& table, Format fmt) {
    if (fmt == Format::json) {
        OutputRecord rec{"table", json::object(), to_json(table)};
        return serialize(rec).dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == Format::csv) {
        os << "p,N,theta,residue_count,residues,nc,p_not_residue\n";
        for (const auto& row : table.rows) {
            os << row.p << ',' << row.n << ',' << row.theta << ',' << row.residues.size()
               << ',' << csv_quote(join(row.residues, ";")) << ','
               << (row.certificate.nc_holds ? "true" : "false") << ','
               << (row.certificate.p_not_residue_holds ? "true" : "false") << '\n';
        }
        return os.str();
    }
    os << "   p    N   theta  #residues\n";
    for (const auto& row : table.rows) {
        os << ' ' << std::setw(3) << row.p << ' ' << std::setw(4) << row.n << ' '
           << std::setw(7) << row.theta << ' ' << std::setw(10) << row.residues.size() << '\n';
    }
    for (std::uint64_t p : table.missing)
        os << " p = " << p << ": none found\n";
    return os.str();
}

inline std::string render_scan(const ScanReport& r, Format fmt, double elapsed_seconds = 0.0) {
    if (fmt == Format::json) {
        json payload = to_json(r);
        payload["elapsed_seconds"] = elapsed_seconds;
        OutputRecord rec{"scan", json{{"p", r.p}, {"bound", r.bound}}, payload};
        return serialize(rec).dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "p,bound,include_p_condition,exhaustive,count,qualifying\n";
        os << r.p << ',' << r.bound << ',' << (r.include_p_condition ? "true" : "false") << ','
           << (r.exhaustive ? "true" : "false") << ',' << r.qualifying.size() << ','
           << csv_quote(join(r.qualifying, ";")) << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "scan p = " << r.p << ", bound = " << r.bound
       << (r.include_p_condition ? " (NC + p-not-residue)" : " (NC only)") << '\n';
    os << "  qualifying (" << r.qualifying.size() << "): "
       << (r.qualifying.empty() ? "none" : join(r.qualifying, ", ")) << '\n';
    os << "  exhaustive: " << (r.exhaustive ? "yes" : "no") << ", elapsed: " << elapsed_seconds
       << " s\n";
    return os.str();
}

inline std::string render_bound(const SizeBound& b, Format fmt) {
    if (fmt == Format::json) {
        OutputRecord rec{"bound", json{{"p", b.p}}, to_json(b)};
        return serialize(rec).dump(2) + "\n";
    }
    if (fmt == Format::csv) {
        std::ostringstream os;
        os << "p,aux_count,product,min_max_solution,decimal_digits\n";
        os << b.p << ',' << b.auxiliaries.size() << ',' << b.product.get_str() << ','
           << b.min_max_solution.get_str() << ',' << b.decimal_digits << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "size bound for p = " << b.p << " from " << b.auxiliaries.size()
       << " auxiliaries {" << join(b.auxiliaries, ", ") << "}\n";
    os << "  product of auxiliaries: " << b.product.get_str() << '\n';
    os << "  max(x,y,z) >= " << b.min_max_solution.get_str() << " (" << b.decimal_digits
       << " decimal digits)\n";
    return os.str();
}

}  // namespace germain::report
