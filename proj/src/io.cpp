#include "frext/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace frext {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CurveSpec curve_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("curve spec: expected an object with a \"kind\" field");
    CurveSpec s;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "circle") {
        s.kind = CurveSpec::Kind::Circle;
        s.radius = j.at("radius").get<double>();
        s.extent = j.at("extent").get<double>();
    } else if (kind == "parabola") {
        s.kind = CurveSpec::Kind::Parabola;
        s.mu = j.at("mu").get<double>();
        s.halfwidth = j.at("halfwidth").get<double>();
    } else if (kind == "perturbed_parabola") {
        s.kind = CurveSpec::Kind::PerturbedParabola;
        s.lambda = j.at("lambda").get<double>();
        s.a = j.at("a").get<double>();
        if (j.contains("psi")) s.psi = j.at("psi").get<std::vector<double>>();
        s.halfwidth = j.at("halfwidth").get<double>();
    } else if (kind == "curvature_samples") {
        s.kind = CurveSpec::Kind::CurvatureSamples;
        s.kappa_samples = j.at("kappa").get<std::vector<double>>();
        s.total_length = j.at("length").get<double>();
    } else {
        throw std::invalid_argument("curve spec: unknown kind \"" + kind + "\"");
    }
    s.validate();
    return s;
}

json curve_spec_to_json(const CurveSpec& s) {
    json j;
    switch (s.kind) {
        case CurveSpec::Kind::Circle:
            j["kind"] = "circle";
            j["radius"] = s.radius;
            j["extent"] = s.extent;
            break;
        case CurveSpec::Kind::Parabola:
            j["kind"] = "parabola";
            j["mu"] = s.mu;
            j["halfwidth"] = s.halfwidth;
            break;
        case CurveSpec::Kind::PerturbedParabola:
            j["kind"] = "perturbed_parabola";
            j["lambda"] = s.lambda;
            j["a"] = s.a;
            j["psi"] = s.psi;
            j["halfwidth"] = s.halfwidth;
            break;
        case CurveSpec::Kind::CurvatureSamples:
            j["kind"] = "curvature_samples";
            j["kappa"] = s.kappa_samples;
            j["length"] = s.total_length;
            break;
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

void write_arc_function_csv(const std::string& path, const ArcFunction& f) {
    std::string buf = "s,re,im\n";
    const auto& p = f.arc->param_grid();
    for (std::size_t i = 0; i < f.size(); ++i) {
        buf += format_double(p[i]);
        buf += ',';
        buf += format_double(f.values[i].real());
        buf += ',';
        buf += format_double(f.values[i].imag());
        buf += '\n';
    }
    write_text_file(path, buf);
}

void write_complex_field_csv(const std::string& path, const ComplexField& field) {
    std::string buf = "x,t,re,im\n";
    for (int j = 0; j < field.grid.nt; ++j)
        for (int i = 0; i < field.grid.nx; ++i) {
            const cplx v = field.values[field.grid.index(i, j)];
            buf += format_double(field.grid.x(i));
            buf += ',';
            buf += format_double(field.grid.t(j));
            buf += ',';
            buf += format_double(v.real());
            buf += ',';
            buf += format_double(v.imag());
            buf += '\n';
        }
    write_text_file(path, buf);
}

void write_real_field_csv(const std::string& path, const RealField& field) {
    std::string buf = "u,v,value\n";
    for (int j = 0; j < field.grid.nt; ++j)
        for (int i = 0; i < field.grid.nx; ++i) {
            buf += format_double(field.grid.x(i));
            buf += ',';
            buf += format_double(field.grid.t(j));
            buf += ',';
            buf += format_double(field.values[field.grid.index(i, j)]);
            buf += '\n';
        }
    write_text_file(path, buf);
}

}  // namespace frext
