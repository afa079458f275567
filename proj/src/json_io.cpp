#include "harnack/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace harnack {

namespace {

double finite_number(const json& j, const char* field) {
    if (!j.is_number()) {
        throw Error(ErrorKind::ParseError, std::string("field '") + field + "' must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw Error(ErrorKind::ParseError, std::string("field '") + field + "' must be finite");
    }
    return v;
}

// slacks may legitimately be +-infinity when a bound is symbolic
json slack_to_json(double s) {
    if (std::isinf(s)) return s > 0 ? json("INF") : json("-INF");
    return json(s);
}

double slack_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "INF") return std::numeric_limits<double>::infinity();
        if (s == "-INF") return -std::numeric_limits<double>::infinity();
        throw Error(ErrorKind::ParseError, "slack must be a number, \"INF\" or \"-INF\"");
    }
    return finite_number(j, "slack");
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.order(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", m.order()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw Error(ErrorKind::ParseError, "matrix object needs fields 'n' and 'entries'");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1 ||
        j["n"].get<long long>() > static_cast<long long>(ComplexMatrix::kMaxOrder)) {
        throw Error(ErrorKind::ParseError, "field 'n' must be an integer in [1, 64]");
    }
    const std::size_t n = j["n"].get<std::size_t>();
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != n) {
        throw Error(ErrorKind::ParseError, "field 'entries' must hold exactly n rows");
    }
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw Error(ErrorKind::ParseError,
                        "field 'entries' row " + std::to_string(i) + " must hold exactly n entries");
        }
        for (std::size_t k = 0; k < n; ++k) {
            const json& e = row[k];
            if (e.is_number()) {
                m(i, k) = cxd{finite_number(e, "entries"), 0.0};
            } else if (e.is_array() && e.size() == 2) {
                m(i, k) = cxd{finite_number(e[0], "entries"), finite_number(e[1], "entries")};
            } else {
                throw Error(ErrorKind::ParseError,
                            "field 'entries' element must be a real or an [re, im] pair");
            }
        }
    }
    return m;
}

ComplexMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open matrix file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, "file '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

json extended_real_to_json(const ExtendedReal& x) {
    return x.is_inf ? json("INF") : json(x.value);
}

ExtendedReal extended_real_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "INF") return ExtendedReal::inf();
        throw Error(ErrorKind::ParseError, "extended real must be a number or \"INF\"");
    }
    return ExtendedReal::finite(finite_number(j, "extended real"));
}

json report_to_json(const InequalityReport& rep) {
    json flags = json::array();
    for (EqualityFlag f : rep.equality) flags.push_back(equality_flag_name(f));
    return json{
        {"name", rep.name},
        {"lower", extended_real_to_json(rep.lower)},
        {"mid", extended_real_to_json(rep.mid)},
        {"upper", extended_real_to_json(rep.upper)},
        {"holds_lower", rep.holds_lower},
        {"holds_upper", rep.holds_upper},
        {"slack_lower", slack_to_json(rep.slack_lower)},
        {"slack_upper", slack_to_json(rep.slack_upper)},
        {"equality_flags", std::move(flags)},
        {"notes", rep.notes},
    };
}

InequalityReport report_from_json(const json& j) {
    InequalityReport rep;
    rep.name = j.at("name").get<std::string>();
    rep.lower = extended_real_from_json(j.at("lower"));
    rep.mid = extended_real_from_json(j.at("mid"));
    rep.upper = extended_real_from_json(j.at("upper"));
    rep.holds_lower = j.at("holds_lower").get<bool>();
    rep.holds_upper = j.at("holds_upper").get<bool>();
    rep.slack_lower = slack_from_json(j.at("slack_lower"));
    rep.slack_upper = slack_from_json(j.at("slack_upper"));
    for (const json& f : j.at("equality_flags")) {
        rep.equality.push_back(equality_flag_from_name(f.get<std::string>()));
    }
    rep.notes = j.at("notes").get<std::string>();
    return rep;
}

} // namespace harnack
