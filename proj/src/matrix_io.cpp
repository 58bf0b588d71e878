#include "bellswap/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bellswap/errors.hpp"

namespace bellswap {

std::string format_double_17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_plane(std::string& out, const ComplexMatrix& m, bool imag,
                  const std::string& pad) {
    out += "[";
    for (int r = 0; r < m.dim(); ++r) {
        if (r > 0) out += ",";
        if (!pad.empty()) out += "\n" + pad + "  ";
        out += "[";
        for (int c = 0; c < m.dim(); ++c) {
            if (c > 0) out += ", ";
            out += format_double_17(imag ? m.im_at(r, c) : m.re_at(r, c));
        }
        out += "]";
    }
    if (!pad.empty()) out += "\n" + pad;
    out += "]";
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string nl = indent > 0 ? "\n" : "";
    const std::string sp = indent > 0 ? pad + "  " : "";
    std::string out = "{" + nl;
    out += sp + "\"dim\": " + std::to_string(m.dim()) + "," + nl;
    out += sp + "\"re\": ";
    append_plane(out, m, false, indent > 0 ? pad + "  " : "");
    out += "," + nl;
    out += sp + "\"im\": ";
    append_plane(out, m, true, indent > 0 ? pad + "  " : "");
    out += nl + pad + "}";
    return out;
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream f(path);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << matrix_to_json(m, 0) << "\n";
    if (!f) throw io_error("write failed: " + path);
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
        throw parse_error("matrix JSON must be an object with dim, re, im");
    }
    const int dim = j["dim"].is_number_integer() ? j["dim"].get<int>() : -1;
    if (dim < 1) throw parse_error("matrix JSON: dim must be a positive integer");
    ComplexMatrix m(dim);
    for (const bool imag : {false, true}) {
        const auto& plane = j[imag ? "im" : "re"];
        if (!plane.is_array() || plane.size() != static_cast<std::size_t>(dim)) {
            throw parse_error("matrix JSON: plane must have dim rows");
        }
        for (int r = 0; r < dim; ++r) {
            const auto& row = plane[static_cast<std::size_t>(r)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
                throw parse_error("matrix JSON: row must have dim entries");
            }
            for (int c = 0; c < dim; ++c) {
                const auto& cell = row[static_cast<std::size_t>(c)];
                if (!cell.is_number()) throw parse_error("matrix JSON: non-numeric entry");
                if (imag) {
                    m.im_at(r, c) = cell.get<double>();
                } else {
                    m.re_at(r, c) = cell.get<double>();
                }
            }
        }
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return matrix_from_json(ss.str());
}

}  // namespace bellswap
