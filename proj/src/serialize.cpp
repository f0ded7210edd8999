#include "bergman/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bergman {

namespace {

using nlohmann::json;

std::string pair_json(double re, double im) {
    return "[" + json_number(re) + ", " + json_number(im) + "]";
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::vector<std::pair<double, double>> coeff_pairs(const Poly& f) {
    std::vector<std::pair<double, double>> out;
    const int d = f.degree();
    for (int m = 0; m <= d; ++m) out.emplace_back(f.c[size_t(m)].real(), f.c[size_t(m)].imag());
    return out;
}

std::string pairs_array(const std::vector<std::pair<double, double>>& rows) {
    std::string s = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ", ";
        s += pair_json(rows[i].first, rows[i].second);
    }
    s += "]";
    return s;
}

std::string number_array(const std::vector<double>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += json_number(v[i]);
    }
    s += "]";
    return s;
}

double require_number(const json& j, const std::string& what) {
    if (!j.is_number()) throw std::invalid_argument("polynomial JSON: " + what + " is not a number");
    return j.get<double>();
}

Poly poly_from_json_value(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        auto it = j.find("coefficients");
        if (it == j.end())
            throw std::invalid_argument("polynomial JSON: object lacks a 'coefficients' key");
        arr = &*it;
    }
    if (!arr->is_array())
        throw std::invalid_argument("polynomial JSON: expected an array of [re, im] pairs");
    Poly f;
    f.c.reserve(arr->size());
    size_t idx = 0;
    for (const auto& el : *arr) {
        const std::string where = "coefficient " + std::to_string(idx);
        if (el.is_number()) {
            f.c.emplace_back(el.get<double>(), 0.0);
        } else if (el.is_array() && (el.size() == 1 || el.size() == 2)) {
            const double re = require_number(el[0], where + " real part");
            const double im = el.size() == 2 ? require_number(el[1], where + " imaginary part") : 0.0;
            f.c.emplace_back(re, im);
        } else {
            throw std::invalid_argument("polynomial JSON: " + where + " must be [re, im]");
        }
        ++idx;
    }
    return f;
}

double parse_param(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::invalid_argument("weight string: key '" + key + "' has a malformed number '" +
                                    value + "'");
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return format_double(v);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += "\"";
    return out;
}

std::string poly_to_json(const Poly& f) { return pairs_array(coeff_pairs(f)); }

Poly poly_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("polynomial JSON: parse error: ") + err.what());
    }
    return poly_from_json_value(j);
}

WeightSpec parse_weight(const std::string& text) {
    const auto colon = text.find(':');
    const std::string family = text.substr(0, colon);
    std::vector<std::pair<std::string, double>> params;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("weight string: expected key=value, got '" + item + "'");
            const std::string key = item.substr(0, eq);
            for (const auto& kv : params)
                if (kv.first == key)
                    throw std::invalid_argument("weight string: duplicate key '" + key + "'");
            params.emplace_back(key, parse_param(key, item.substr(eq + 1)));
        }
    }

    auto take = [&params, &family](const std::string& key) {
        for (auto it = params.begin(); it != params.end(); ++it) {
            if (it->first == key) {
                const double v = it->second;
                params.erase(it);
                return v;
            }
        }
        throw std::invalid_argument("weight string: family '" + family + "' is missing key '" +
                                    key + "'");
    };
    auto finish = [&params, &family](WeightSpec spec) {
        if (!params.empty())
            throw std::invalid_argument("weight string: family '" + family +
                                        "' has an unknown key '" + params.front().first + "'");
        const ValidationReport rep = spec.validate();
        if (!rep.valid)
            throw std::invalid_argument("weight string: '" + spec.label() +
                                        "' failed validation: " + rep.detail);
        return spec;
    };

    if (family == "fock") return finish(WeightSpec::fock(take("alpha")));
    if (family == "affine") {
        const double a = take("a");
        const double b = take("b");
        const double R = take("R");
        return finish(WeightSpec::affine_disc(a, b, R));
    }
    if (family == "power") {
        const double beta = take("beta");
        const double R = take("R");
        return finish(WeightSpec::power_disc(beta, R));
    }
    throw std::invalid_argument("weight string: unknown family '" + family + "'");
}

std::string format_weight(const WeightSpec& spec) {
    switch (spec.family()) {
        case WeightSpec::Family::fock: return "fock:alpha=" + format_double(spec.alpha());
        case WeightSpec::Family::affine:
            return "affine:a=" + format_double(spec.a()) + ",b=" + format_double(spec.b()) +
                   ",R=" + format_double(spec.radius());
        case WeightSpec::Family::power:
            return "power:beta=" + format_double(spec.beta()) +
                   ",R=" + format_double(spec.radius());
        case WeightSpec::Family::custom: break;
    }
    throw std::invalid_argument("format_weight: custom weights have no canonical string form");
}

std::string solution_to_json(const ExtremalSolution& sol, double p, const std::string& weight) {
    std::string s = "{\n";
    s += "  \"degree\": " + std::to_string(sol.degree) + ",\n";
    s += "  \"p\": " + json_number(p) + ",\n";
    s += "  \"weight\": " + json_string(weight) + ",\n";
    s += "  \"coefficients\": " + poly_to_json(sol.f) + ",\n";
    s += "  \"dual_norm\": " + json_number(sol.dual_norm) + ",\n";
    s += "  \"residual\": " + json_number(sol.residual) + ",\n";
    s += "  \"iterations\": " + std::to_string(sol.iterations) + ",\n";
    s += "  \"converged\": " + json_bool(sol.converged) + ",\n";
    s += "  \"message\": " + json_string(sol.message) + "\n";
    s += "}\n";
    return s;
}

std::string bound_reports_to_json(const std::vector<BoundReport>& reports) {
    std::string s = "[\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const BoundReport& r = reports[i];
        s += "  {\n";
        s += "    \"context\": " + json_string(r.context) + ",\n";
        s += "    \"lhs\": " + json_number(r.lhs) + ",\n";
        s += "    \"rhs\": " + json_number(r.rhs) + ",\n";
        s += "    \"slack\": " + json_number(r.slack) + ",\n";
        s += "    \"tol\": " + json_number(r.tol) + ",\n";
        s += "    \"pass\": " + json_bool(r.pass) + ",\n";
        s += "    \"dual_norm\": " + json_number(r.dual_norm) + ",\n";
        s += "    \"residual\": " + json_number(r.residual) + ",\n";
        s += "    \"iterations\": " + std::to_string(r.iterations) + ",\n";
        s += "    \"solver_converged\": " + json_bool(r.solver_converged) + "\n";
        s += "  }";
        if (i + 1 < reports.size()) s += ",";
        s += "\n";
    }
    s += "]\n";
    return s;
}

std::string density_to_json(const DensityReport& rep) {
    std::string s = "{\n";
    s += "  \"condition\": " + json_string(rep.condition) + ",\n";
    s += "  \"p\": " + json_number(rep.p) + ",\n";
    s += "  \"rho\": " + json_number(rep.rho) + ",\n";
    s += "  \"beta\": " + json_number(rep.beta) + ",\n";
    s += "  \"alpha\": " + json_number(rep.alpha) + ",\n";
    s += "  \"I1\": " + json_number(rep.I1) + ",\n";
    s += "  \"I2\": " + json_number(rep.I2) + ",\n";
    s += "  \"tail1\": " + json_number(rep.tail1) + ",\n";
    s += "  \"tail2\": " + json_number(rep.tail2) + ",\n";
    s += "  \"finite1\": " + json_bool(rep.finite1) + ",\n";
    s += "  \"finite2\": " + json_bool(rep.finite2) + ",\n";
    s += "  \"finite\": " + json_bool(rep.finite) + ",\n";
    s += "  \"notes\": " + json_string(rep.notes) + "\n";
    s += "}\n";
    return s;
}

std::string decay_to_json(const DecayReport& rep) {
    std::string s = "{\n";
    s += "  \"dp_finite\": " + json_bool(rep.dp_finite) + ",\n";
    s += "  \"dp_value\": " + json_number(rep.dp_value) + ",\n";
    s += "  \"liminf_positive\": " + json_bool(rep.liminf_positive) + ",\n";
    s += "  \"liminf_value\": " + json_number(rep.liminf_value) + ",\n";
    s += "  \"ratio_positive\": " + json_bool(rep.ratio_positive) + ",\n";
    s += "  \"ratio_c\": " + json_number(rep.ratio_c) + ",\n";
    s += "  \"peak\": " + json_number(rep.peak) + ",\n";
    s += "  \"peak_r\": " + json_number(rep.peak_r) + ",\n";
    s += "  \"final_value\": " + json_number(rep.final_value) + ",\n";
    s += "  \"tail_monotone\": " + json_bool(rep.tail_monotone) + ",\n";
    s += "  \"final_small\": " + json_bool(rep.final_small) + ",\n";
    s += "  \"pass\": " + json_bool(rep.pass) + ",\n";
    s += "  \"notes\": " + json_string(rep.notes) + ",\n";
    s += "  \"rows\": " + pairs_array(rep.rows) + "\n";
    s += "}\n";
    return s;
}

std::string convexity_to_json(const ConvexityReport& rep) {
    std::string s = "{\n";
    s += "  \"slack\": " + json_number(rep.slack) + ",\n";
    s += "  \"min_second_diff_mean\": " + json_number(rep.min_second_diff_mean) + ",\n";
    s += "  \"min_second_diff_g\": " + json_number(rep.min_second_diff_g) + ",\n";
    s += "  \"pass\": " + json_bool(rep.pass) + ",\n";
    s += "  \"r\": " + number_array(rep.r) + ",\n";
    s += "  \"log_mean\": " + number_array(rep.log_mean) + ",\n";
    s += "  \"second_diff_mean\": " + number_array(rep.second_diff_mean) + ",\n";
    s += "  \"second_diff_g\": " + number_array(rep.second_diff_g) + "\n";
    s += "}\n";
    return s;
}

std::string gamma_to_json(const GammaReport& rep) {
    std::string s = "{\n";
    s += "  \"increasing\": " + json_bool(rep.increasing) + ",\n";
    s += "  \"in_range\": " + json_bool(rep.in_range) + ",\n";
    s += "  \"pass\": " + json_bool(rep.pass) + ",\n";
    s += "  \"rows\": [";
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        if (i) s += ", ";
        s += "{\"x\": " + json_number(rep.rows[i].x) +
             ", \"ratio\": " + json_number(rep.rows[i].ratio) + "}";
    }
    s += "]\n}\n";
    return s;
}

std::string convergence_to_json(const std::vector<ConvergenceRow>& rows) {
    std::string s = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        s += "  {\"degree\": " + std::to_string(rows[i].degree) +
             ", \"dual_norm\": " + json_number(rows[i].dual_norm) +
             ", \"gap\": " + json_number(rows[i].gap) + "}";
        if (i + 1 < rows.size()) s += ",";
        s += "\n";
    }
    s += "]\n";
    return s;
}

std::string continuity_to_json(const std::vector<ContinuityRow>& rows) {
    std::string s = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        s += "  {\"delta\": " + json_number(rows[i].delta) +
             ", \"distance\": " + json_number(rows[i].distance) + "}";
        if (i + 1 < rows.size()) s += ",";
        s += "\n";
    }
    s += "]\n";
    return s;
}

std::string dilation_to_json(const std::vector<DilationRow>& rows) {
    std::string s = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        s += "  {\"rho\": " + json_number(rows[i].rho) +
             ", \"distance\": " + json_number(rows[i].distance) + "}";
        if (i + 1 < rows.size()) s += ",";
        s += "\n";
    }
    s += "]\n";
    return s;
}

std::string means_to_csv(const std::vector<MeansRow>& rows) {
    std::string s = "r,Mp,Dp,Np\n";
    for (const MeansRow& row : rows) {
        s += format_double(row.r) + "," + format_double(row.Mp) + "," + format_double(row.Dp) +
             "," + format_double(row.Np) + "\n";
    }
    return s;
}

std::string two_column_csv(const std::string& h1, const std::string& h2,
                           const std::vector<std::pair<double, double>>& rows) {
    std::string s = h1 + "," + h2 + "\n";
    for (const auto& row : rows)
        s += format_double(row.first) + "," + format_double(row.second) + "\n";
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bergman
