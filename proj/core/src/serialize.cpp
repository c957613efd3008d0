#include "jp/serialize.hpp"

#include <cstdio>

namespace jp {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

void append_int_array(std::string& out, const Parts& values) {
    out += '[';
    for (size_t t = 0; t < values.size(); ++t) {
        if (t > 0) out += ',';
        out += std::to_string(values[t]);
    }
    out += ']';
}

}  // namespace

std::string to_json(const PowerSeries& f) {
    std::string out = "{\"q_max\":" + std::to_string(f.q_max()) + ",\"coeffs\":[";
    for (int e = 0; e <= f.q_max(); ++e) {
        if (e > 0) out += ',';
        out += quoted(f[e].str());
    }
    out += "]}";
    return out;
}

std::string to_json(const BivariateSeries& f) {
    std::string out = "{\"z_max\":" + std::to_string(f.z_max()) +
                      ",\"q_max\":" + std::to_string(f.q_max()) + ",\"coeffs\":[";
    for (int a = 0; a <= f.z_max(); ++a) {
        if (a > 0) out += ',';
        out += '[';
        for (int b = 0; b <= f.q_max(); ++b) {
            if (b > 0) out += ',';
            out += quoted(f.coeff(a, b).str());
        }
        out += ']';
    }
    out += "]}";
    return out;
}

std::string to_json(const std::vector<Parts>& partitions) {
    std::string out = "[";
    for (size_t t = 0; t < partitions.size(); ++t) {
        if (t > 0) out += ',';
        append_int_array(out, partitions[t]);
    }
    out += ']';
    return out;
}

std::string to_json(const Overpartition& o) {
    std::string out = "{\"alpha\":";
    append_int_array(out, o.alpha);
    out += ",\"beta\":";
    append_int_array(out, o.beta);
    out += '}';
    return out;
}

std::string to_json(const IdentityReport& r) {
    std::string out = "{\"name\":" + quoted(r.name) + ",\"params\":{";
    for (size_t t = 0; t < r.params.size(); ++t) {
        if (t > 0) out += ',';
        out += quoted(r.params[t].first) + ":" + quoted(r.params[t].second);
    }
    out += "},\"truncation\":{\"z_max\":" + std::to_string(r.z_max) +
           ",\"q_max\":" + std::to_string(r.q_max) + "}";
    out += ",\"status\":";
    out += r.pass ? "\"pass\"" : "\"fail\"";
    out += ",\"witness\":";
    if (r.witness) {
        out += "{\"relation\":" + quoted(r.witness->relation) +
               ",\"z_exp\":" + std::to_string(r.witness->z_exp) +
               ",\"q_exp\":" + std::to_string(r.witness->q_exp) +
               ",\"lhs\":" + quoted(r.witness->lhs) + ",\"rhs\":" + quoted(r.witness->rhs) + "}";
    } else {
        out += "null";
    }
    out += ",\"verified\":" + quoted(r.verified) + "}";
    return out;
}

std::string to_json(const std::vector<IdentityReport>& reports) {
    std::string out = "[";
    for (size_t t = 0; t < reports.size(); ++t) {
        if (t > 0) out += ',';
        out += to_json(reports[t]);
    }
    out += ']';
    return out;
}

std::string count_table_csv(const JaggedCounts& counts, char kind, int index) {
    std::string out = "K,i_or_j,m,n,count\n";
    const int K = counts.params().K;
    for (int m = 0; m <= counts.m_max(); ++m)
        for (int n = 0; n <= counts.n_max(); ++n) {
            const long long c = kind == 'A' ? counts.count_A(index, m, n)
                                            : counts.count_B(index, m, n);
            out += std::to_string(K) + ',' + std::to_string(index) + ',' + std::to_string(m) +
                   ',' + std::to_string(n) + ',' + std::to_string(c) + '\n';
        }
    return out;
}

std::string sequence_csv(const std::vector<std::pair<int, long long>>& rows) {
    std::string out = "n,count\n";
    for (const auto& [n, c] : rows)
        out += std::to_string(n) + ',' + std::to_string(c) + '\n';
    return out;
}

std::string series_csv(const BivariateSeries& f) {
    std::string out = "z\\q";
    for (int b = 0; b <= f.q_max(); ++b) out += ',' + std::to_string(b);
    out += '\n';
    for (int a = 0; a <= f.z_max(); ++a) {
        out += std::to_string(a);
        for (int b = 0; b <= f.q_max(); ++b) out += ',' + f.coeff(a, b).str();
        out += '\n';
    }
    return out;
}

std::string series_csv(const PowerSeries& f) {
    std::string out = "q_exp,coeff\n";
    for (int e = 0; e <= f.q_max(); ++e)
        out += std::to_string(e) + ',' + f[e].str() + '\n';
    return out;
}

std::string to_text(const std::vector<Parts>& partitions) {
    std::string out;
    for (const Parts& p : partitions) {
        for (size_t t = 0; t < p.size(); ++t) {
            if (t > 0) out += ' ';
            out += std::to_string(p[t]);
        }
        if (p.empty()) out += "(empty)";
        out += '\n';
    }
    return out;
}

std::string to_text(const IdentityReport& r) {
    std::string out = r.pass ? "[PASS] " : "[FAIL] ";
    out += r.name;
    if (!r.params.empty()) {
        out += " (";
        for (size_t t = 0; t < r.params.size(); ++t) {
            if (t > 0) out += ", ";
            out += r.params[t].first + "=" + r.params[t].second;
        }
        out += ")";
    }
    if (r.z_max >= 0 || r.q_max >= 0)
        out += " [z_max=" + std::to_string(r.z_max) + ", q_max=" + std::to_string(r.q_max) + "]";
    if (!r.pass && r.witness) {
        out += " witness: " + r.witness->relation + " at (z^" +
               std::to_string(r.witness->z_exp) + ", q^" + std::to_string(r.witness->q_exp) +
               "): " + r.witness->lhs + " != " + r.witness->rhs;
    }
    return out;
}

}  // namespace jp
