#include "lpg/profile_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string_view>

#include "lpg/errors.hpp"

namespace lpg {

namespace {

bool has_idle(const LoadProfile& p) {
    const auto& idle = p.power(Component::idle);
    return std::any_of(idle.begin(), idle.end(), [](double v) { return v != 0.0; });
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

double parse_number(std::string_view s, std::size_t line, std::size_t column) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError("not a number: '" + std::string(s) + "'", line, column);
    return v;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CsvProfile csv_columns(const LoadProfile& profile) {
    CsvProfile c;
    c.time_s = profile.time_s;
    c.boom_w = profile.power(Component::boom);
    c.arm_w = profile.power(Component::arm);
    c.swing_w = profile.power(Component::swing);
    if (has_idle(profile)) c.idle_w = profile.power(Component::idle);
    c.total_w = profile.total_w;
    return c;
}

std::string profile_to_csv(const LoadProfile& profile) {
    const auto c = csv_columns(profile);
    std::string out = c.idle_w ? "t_s,p_boom_w,p_arm_w,p_swing_w,p_idle_w,p_total_w\n"
                               : "t_s,p_boom_w,p_arm_w,p_swing_w,p_total_w\n";
    out.reserve(out.size() + c.time_s.size() * 64);
    for (std::size_t k = 0; k < c.time_s.size(); ++k) {
        out += format_number(c.time_s[k]);
        for (const auto* col : {&c.boom_w, &c.arm_w, &c.swing_w}) {
            out += ',';
            out += format_number((*col)[k]);
        }
        if (c.idle_w) {
            out += ',';
            out += format_number((*c.idle_w)[k]);
        }
        out += ',';
        out += format_number(c.total_w[k]);
        out += '\n';
    }
    return out;
}

CsvProfile parse_profile_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty CSV", 1, 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    bool idle = false;
    if (line == "t_s,p_boom_w,p_arm_w,p_swing_w,p_idle_w,p_total_w") idle = true;
    else if (line != "t_s,p_boom_w,p_arm_w,p_swing_w,p_total_w")
        throw ParseError("unexpected CSV header '" + line + "'", 1, 1);

    CsvProfile c;
    if (idle) c.idle_w.emplace();
    const std::size_t width = idle ? 6 : 5;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != width)
            throw ParseError("expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()),
                             lineno, 1);
        std::vector<double> v(width);
        std::size_t column = 1;
        for (std::size_t i = 0; i < width; ++i) {
            v[i] = parse_number(fields[i], lineno, column);
            column += fields[i].size() + 1;
        }
        c.time_s.push_back(v[0]);
        c.boom_w.push_back(v[1]);
        c.arm_w.push_back(v[2]);
        c.swing_w.push_back(v[3]);
        if (idle) c.idle_w->push_back(v[4]);
        c.total_w.push_back(v[width - 1]);
    }
    return c;
}

std::string profile_to_json(const LoadProfile& profile) {
    nlohmann::ordered_json j;
    j["machine"] = profile.machine;
    j["dt_s"] = profile.dt_s;
    j["horizon_s"] = profile.horizon_s();
    j["total_energy_j"] = profile.total_energy_j();
    j["time_s"] = profile.time_s;
    auto& power = j["power_w"];
    for (const auto c : kAllComponents) power[to_string(c)] = profile.power(c);
    power["total"] = profile.total_w;
    const char* joint_names[] = {"boom", "arm", "swing"};
    for (std::size_t i = 0; i < profile.joints.size(); ++i) {
        j["joints"][joint_names[i]]["angle_deg"] = profile.joints[i].angle_deg;
        j["joints"][joint_names[i]]["velocity_deg_s"] = profile.joints[i].velocity_deg_s;
    }
    j["tasks"] = nlohmann::ordered_json::array();
    for (const auto& a : profile.annotations) {
        nlohmann::ordered_json t;
        t["task"] = a.task;
        t["index"] = a.index;
        t["repeat"] = a.repeat;
        t["component"] = to_string(a.component);
        t["start_s"] = a.start_s;
        t["end_s"] = a.end_s;
        t["adjustment"] = to_string(a.adjustment);
        t["requested_duration_s"] = a.requested_duration_s;
        t["effective_duration_s"] = a.effective_duration_s;
        t["requested_vmax"] = a.requested_vmax;
        t["effective_vmax"] = a.effective_vmax;
        t["peak_power_w"] = a.peak_power_w;
        t["energy_j"] = a.energy_j;
        t["over_center"] = a.over_center;
        t["warnings"] = a.warnings;
        j["tasks"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

namespace {

struct Series {
    std::string label;
    const std::vector<double>* y;
    const char* color;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Round a span up to 1, 2 or 5 times a power of ten, for tick spacing.
double nice_step(double span, int ticks) {
    const double raw = span / ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag) return m * mag;
    return 10.0 * mag;
}

void panel(std::ostringstream& svg, double x0, double y0, double w, double h, const std::vector<double>& t,
           const std::vector<Series>& series, const std::string& title, const std::string& ylabel) {
    double lo = 0.0, hi = 0.0;
    for (const auto& s : series)
        for (const double v : *s.y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (hi - lo < 1e-12) hi = lo + 1.0;
    const double tmax = t.empty() || t.back() <= 0.0 ? 1.0 : t.back();
    const double ystep = nice_step(hi - lo, 5);
    lo = std::floor(lo / ystep) * ystep;
    hi = std::ceil(hi / ystep) * ystep;

    auto px = [&](double tv) { return x0 + w * tv / tmax; };
    auto py = [&](double v) { return y0 + h - h * (v - lo) / (hi - lo); };

    svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"none\" stroke=\"#444\"/>\n";
    svg << "<text x=\"" << x0 + w / 2 << "\" y=\"" << y0 - 8 << "\" text-anchor=\"middle\">" << title
        << "</text>\n";
    svg << "<text transform=\"translate(" << x0 - 55 << "," << y0 + h / 2
        << ") rotate(-90)\" text-anchor=\"middle\">" << ylabel << "</text>\n";

    for (double v = lo; v <= hi + ystep * 1e-6; v += ystep) {
        const double y = py(v);
        svg << "<line x1=\"" << x0 << "\" y1=\"" << y << "\" x2=\"" << x0 + w << "\" y2=\"" << y
            << "\" stroke=\"#ddd\"/>\n";
        svg << "<text x=\"" << x0 - 6 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
            << fmt("%g", std::abs(v) < ystep * 1e-6 ? 0.0 : v) << "</text>\n";
    }
    const double tstep = nice_step(tmax, 8);
    for (double tv = 0.0; tv <= tmax + tstep * 1e-6; tv += tstep) {
        svg << "<text x=\"" << px(tv) << "\" y=\"" << y0 + h + 16
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt("%g", tv) << "</text>\n";
    }
    svg << "<text x=\"" << x0 + w / 2 << "\" y=\"" << y0 + h + 34 << "\" text-anchor=\"middle\">time [s]</text>\n";

    double ly = y0 + 14;
    for (const auto& s : series) {
        svg << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << s.color << "\" points=\"";
        for (std::size_t k = 0; k < t.size(); ++k) svg << fmt("%.2f", px(t[k])) << ',' << fmt("%.2f", py((*s.y)[k])) << ' ';
        svg << "\"/>\n";
        svg << "<line x1=\"" << x0 + w - 110 << "\" y1=\"" << ly - 4 << "\" x2=\"" << x0 + w - 90 << "\" y2=\""
            << ly - 4 << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << x0 + w - 85 << "\" y=\"" << ly << "\" font-size=\"11\">" << s.label << "</text>\n";
        ly += 15;
    }
}

std::string document(double width, double height, const std::string& body) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"13\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string power_plot_svg(const LoadProfile& profile) {
    std::vector<Series> series{{"boom", &profile.power(Component::boom), "#1f77b4"},
                               {"arm", &profile.power(Component::arm), "#ff7f0e"},
                               {"swing", &profile.power(Component::swing), "#2ca02c"}};
    if (has_idle(profile)) series.push_back({"idle", &profile.power(Component::idle), "#7f7f7f"});
    std::ostringstream body;
    panel(body, 80, 40, 820, 360, profile.time_s, series, "Power demand: " + profile.machine, "power [W]");
    return document(960, 460, body.str());
}

std::string joint_plot_svg(const LoadProfile& profile) {
    const auto& j = profile.joints;
    std::ostringstream body;
    panel(body, 80, 40, 820, 260, profile.time_s,
          {{"boom", &j[0].angle_deg, "#1f77b4"}, {"arm", &j[1].angle_deg, "#ff7f0e"},
           {"swing", &j[2].angle_deg, "#2ca02c"}},
          "Joint angles", "angle [deg]");
    panel(body, 80, 380, 820, 260, profile.time_s,
          {{"boom", &j[0].velocity_deg_s, "#1f77b4"}, {"arm", &j[1].velocity_deg_s, "#ff7f0e"},
           {"swing", &j[2].velocity_deg_s, "#2ca02c"}},
          "Joint velocities", "velocity [deg/s]");
    return document(960, 700, body.str());
}

std::string summary_table(const LoadProfile& profile) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-14s %-6s %9s %9s %13s %13s  %s\n", "#", "task", "comp", "start_s",
                  "end_s", "peak_W", "energy_J", "notes");
    out << line;
    for (const auto& a : profile.annotations) {
        std::string notes;
        if (a.adjustment != Adjustment::none) notes = to_string(a.adjustment);
        for (const auto& w : a.warnings) notes += (notes.empty() ? "" : "; ") + w;
        std::snprintf(line, sizeof line, "%-4zu %-14s %-6s %9.2f %9.2f %13.1f %13.1f  %s\n", a.index,
                      a.task.c_str(), to_string(a.component), a.start_s, a.end_s, a.peak_power_w, a.energy_j,
                      notes.c_str());
        out << line;
    }
    double peak = 0.0;
    for (const double v : profile.total_w) peak = std::max(peak, v);
    std::snprintf(line, sizeof line, "horizon %.2f s, peak total %.1f W, total energy %.1f J\n",
                  profile.horizon_s(), peak, profile.total_energy_j());
    out << line;
    return out.str();
}

}  // namespace lpg
