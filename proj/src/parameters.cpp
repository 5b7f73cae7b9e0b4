#include "upsc/parameters.hpp"

#include "upsc/errors.hpp"
#include "upsc/textio.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <string_view>

namespace upsc {
namespace {

struct Field {
    std::string_view key;
    double ModelParameters::*member;
};

constexpr std::array<Field, 17> model_fields{{
    {"x0", &ModelParameters::x0},
    {"N0", &ModelParameters::N0},
    {"mu_max", &ModelParameters::mu_max},
    {"K_N", &ModelParameters::K_N},
    {"k2", &ModelParameters::k2},
    {"Y_xN", &ModelParameters::Y_xN},
    {"x_max", &ModelParameters::x_max},
    {"R_int", &ModelParameters::R_int},
    {"L0", &ModelParameters::L0},
    {"C_f", &ModelParameters::C_f},
    {"Q", &ModelParameters::Q},
    {"eta_eff", &ModelParameters::eta_eff},
    {"A_s", &ModelParameters::A_s},
    {"A_E", &ModelParameters::A_E},
    {"alpha", &ModelParameters::alpha},
    {"n", &ModelParameters::n},
    {"E0", &ModelParameters::E0},
}};

struct ConstField {
    std::string_view key;
    double PhysicalConstants::*member;
};

constexpr std::array<ConstField, 4> constant_fields{{
    {"R", &PhysicalConstants::gas_constant},
    {"F", &PhysicalConstants::faraday},
    {"N_Av", &PhysicalConstants::avogadro},
    {"T", &PhysicalConstants::temperature},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void require_positive(double v, std::string_view key) {
    if (!(v > 0.0))
        throw ValidationError(std::string(key) + " must be strictly positive");
}

} // namespace

void ModelParameters::validate() const {
    constants.validate();
    for (const auto& f : model_fields)
        require_positive(this->*f.member, f.key);
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ValidationError("alpha must lie in (0,1)");
    if (!(eta_eff <= 1.0))
        throw ValidationError("eta_eff must lie in (0,1]");
    if (!(Q <= 1.0))
        throw ValidationError("Q must lie in (0,1]");
    if (!(x0 <= x_max))
        throw ValidationError("x0 must not exceed x_max");
}

ModelParameters parse_parameters(const std::string& text, const std::string& origin) {
    ModelParameters params;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string_view body(line);
        if (const auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        body = trim(body);
        if (body.empty())
            continue;

        const auto eq = body.find('=');
        const std::string where = origin + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos)
            throw ParseError(where + ": expected 'key = value', got '" + std::string(body) + "'");

        const std::string key(trim(body.substr(0, eq)));
        const double value = parse_double(body.substr(eq + 1), where + " (" + key + ")");

        bool known = false;
        for (const auto& f : model_fields) {
            if (f.key == key) {
                params.*f.member = value;
                known = true;
                break;
            }
        }
        if (!known) {
            for (const auto& f : constant_fields) {
                if (f.key == key) {
                    params.constants.*f.member = value;
                    known = true;
                    break;
                }
            }
        }
        if (!known)
            throw ParseError(where + ": unknown key '" + key + "'");
    }
    params.validate();
    return params;
}

ModelParameters load_parameters(const std::filesystem::path& path) {
    return parse_parameters(read_text_file(path), path.string());
}

std::string serialize_parameters(const ModelParameters& params) {
    std::ostringstream out;
    for (const auto& f : constant_fields)
        out << f.key << " = " << full_precision(params.constants.*f.member) << "\n";
    for (const auto& f : model_fields)
        out << f.key << " = " << full_precision(params.*f.member) << "\n";
    return out.str();
}

void save_parameters(const ModelParameters& params, const std::filesystem::path& path) {
    write_text_file(path, serialize_parameters(params));
}

} // namespace upsc
