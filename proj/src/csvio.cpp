#include "skewpair/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace skewpair {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out.good()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

void write_sbbbm_csv(const std::string& path, const SbbbmPath& sb) {
    std::string out = "t,y,lhat\n";
    for (std::size_t k = 0; k < sb.y.size(); ++k) {
        out += format_double(sb.dt * static_cast<double>(k));
        out += ',';
        out += format_double(sb.y[k]);
        out += ',';
        out += format_double(sb.lhat[k]);
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_planar_csv(const std::string& path, const PlanarPath& pp) {
    std::string out = "t,x1,x2,r1,r2,lcol\n";
    for (std::size_t k = 0; k < pp.x1.size(); ++k) {
        out += format_double(pp.dt * static_cast<double>(k));
        out += ',';
        out += format_double(pp.x1[k]);
        out += ',';
        out += format_double(pp.x2[k]);
        out += ',';
        out += format_double(pp.r1[k]);
        out += ',';
        out += format_double(pp.r2[k]);
        out += ',';
        out += format_double(pp.lcol[k]);
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_figure_csv(const std::string& path, const PlanarPath& pp) {
    std::string out = "t,x1,x2\n";
    for (std::size_t k = 0; k < pp.x1.size(); ++k) {
        out += format_double(pp.dt * static_cast<double>(k));
        out += ',';
        out += format_double(pp.x1[k]);
        out += ',';
        out += format_double(pp.x2[k]);
        out += '\n';
    }
    atomic_write_file(path, out);
}

}  // namespace skewpair
