#include "copgraph/graphon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace copgraph {

const char* kernel_kind_name(KernelKind k) {
    return k == KernelKind::cdf ? "cdf" : "density";
}

double component_value(const GraphonComponent& comp, double x, double y) {
    double w;
    if (comp.kind == KernelKind::cdf) {
        w = copula_cdf(comp.copula, x, y);
    } else {
        w = std::fmin(copula_density(comp.copula, x, y), 1.0);
    }
    // cdf values are already in range; keep the clamp as a cheap guarantee
    return std::fmin(std::fmax(w, 0.0), 1.0);
}

Graphon::Graphon(std::vector<GraphonComponent> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw usage_error("graphon needs at least one component");
    for (const auto& c : components_) {
        validate(c.copula);
        if (c.kind == KernelKind::density && !family_has_density(c.copula.family))
            throw usage_error(std::string(family_name(c.copula.family)) +
                              " has no density kernel");
    }
}

double Graphon::evaluate(const std::vector<double>& x,
                         const std::vector<double>& y) const {
    if (x.size() != latent_dim() || y.size() != latent_dim())
        throw size_error("latent vectors must have length " +
                         std::to_string(latent_dim()) + ", got " +
                         std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
    double w = 1.0;
    for (std::size_t j = 0; j < components_.size(); ++j)
        w *= component_value(components_[j], x[j], y[j]);
    return w;
}

double Graphon::evaluate1(double x, double y) const {
    if (latent_dim() != 1)
        throw size_error("evaluate1 needs a one-dimensional graphon, this one has latent dimension " +
                         std::to_string(latent_dim()));
    return component_value(components_[0], x, y);
}

namespace {

std::string format_theta(double theta) {
    // shortest representation that round-trips through parsing
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, theta);
    if (ec != std::errc())
        throw numeric_error("cannot format theta");
    return std::string(buf, end);
}

} // namespace

std::string Graphon::descriptor() const {
    std::string out;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        if (j) out += '*';
        const auto& c = components_[j];
        out += family_name(c.copula.family);
        if (family_has_theta(c.copula.family)) {
            out += ':';
            out += format_theta(c.copula.theta);
        }
        if (c.kind == KernelKind::density) out += ":density";
    }
    return out;
}

Graphon make_cdf_graphon(const CopulaSpec& spec) {
    return Graphon({GraphonComponent{spec, KernelKind::cdf}});
}

Graphon make_density_graphon(const CopulaSpec& spec) {
    return Graphon({GraphonComponent{spec, KernelKind::density}});
}

Graphon make_tensor_graphon(std::vector<GraphonComponent> components) {
    return Graphon(std::move(components));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_theta(const std::string& text, const std::string& component) {
    if (text == "?")
        throw usage_error("component '" + component +
                          "' has a '?' placeholder; that is only valid in a "
                          "calibration template");
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw usage_error("cannot parse theta '" + text + "' in component '" +
                          component + "'");
    return value;
}

GraphonComponent parse_component(const std::string& text) {
    if (text.empty())
        throw usage_error("empty graphon component");
    const auto fields = split(text, ':');
    GraphonComponent comp;
    comp.copula.family = family_from_name(fields[0]);

    std::size_t next = 1;
    if (family_has_theta(comp.copula.family)) {
        if (fields.size() < 2)
            throw usage_error("component '" + text + "' needs a theta, e.g. " +
                              fields[0] + ":2");
        comp.copula.theta = parse_theta(fields[1], text);
        next = 2;
    }
    if (next < fields.size()) {
        const std::string& kind = fields[next];
        if (kind == "cdf") comp.kind = KernelKind::cdf;
        else if (kind == "density") comp.kind = KernelKind::density;
        else if (next == 1)
            throw usage_error("'" + fields[0] + "' takes no theta; unexpected field '" +
                              kind + "' in component '" + text + "'");
        else
            throw usage_error("unknown kernel kind '" + kind + "' in component '" +
                              text + "' (expected cdf or density)");
        ++next;
    }
    if (next < fields.size())
        throw usage_error("trailing fields in component '" + text + "'");
    return comp;
}

} // namespace

Graphon parse_graphon(const std::string& descriptor) {
    if (descriptor.empty())
        throw usage_error("empty graphon descriptor");
    std::vector<GraphonComponent> comps;
    for (const auto& part : split(descriptor, '*'))
        comps.push_back(parse_component(part));
    return Graphon(std::move(comps));
}

} // namespace copgraph
