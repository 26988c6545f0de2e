#include "c2/io.hpp"

#include <cstdio>
#include <fstream>

namespace c2 {

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

Json matrix_to_json(const MatX& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(round12(m(r, c)));
  j["entries"] = entries;
  return j;
}

MatX matrix_from_json(const Json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (rows < 1 || cols < 1 || static_cast<int>(entries.size()) != rows * cols)
    throw DomainError("matrix JSON: entries count must equal rows * cols");
  MatX m(rows, cols);
  int k = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = entries[k++].get<double>();
  if (!m.allFinite()) throw DomainError("matrix JSON: entries must be finite");
  return m;
}

namespace {

Polynomial terms_from_json(const Json& j) {
  Polynomial p;
  for (const auto& t : j) {
    MonomialTerm term;
    term.coefficient = t.at("coefficient").get<double>();
    term.px = t.at("powers")[0].get<int>();
    term.py = t.at("powers")[1].get<int>();
    p.push_back(term);
  }
  return p;
}

Json terms_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& t : p) {
    Json jt;
    jt["coefficient"] = round12(t.coefficient);
    jt["powers"] = {t.px, t.py};
    out.push_back(jt);
  }
  return out;
}

}  // namespace

VectorField field_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const Json& params = j.at("params");
  if (kind == "family") {
    FamilyParams p;
    p.b1 = params.at("b1").get<double>();
    p.b2 = params.at("b2").get<double>();
    p.b3 = params.at("b3").get<double>();
    p.b4 = params.at("b4").get<double>();
    p.s = params.at("s").get<int>();
    p.m = params.at("m").get<int>();
    p.q = params.at("q").get<int>();
    return family_to_field(p);
  }
  if (kind == "network") {
    NetworkParams p;
    p.delta1 = params.at("delta")[0].get<double>();
    p.delta2 = params.at("delta")[1].get<double>();
    const MatX W = matrix_from_json(params.at("W"));
    if (W.rows() != 2 || W.cols() != 2) throw DomainError("network W must be 2x2");
    p.W = W;
    p.pi = params.at("pi").get<double>();
    const std::string psi = params.at("psi").get<std::string>();
    if (psi == "tanh")
      p.psi = PsiKind::Tanh;
    else if (psi == "boltzmann")
      p.psi = PsiKind::Boltzmann;
    else
      throw DomainError("network psi must be 'tanh' or 'boltzmann'");
    return network_to_field(p);
  }
  if (kind == "polynomial") {
    return VectorField::polynomial(terms_from_json(params.at("terms").at("component1")),
                                   terms_from_json(params.at("terms").at("component2")));
  }
  throw DomainError("system kind must be 'family', 'network' or 'polynomial'");
}

Json field_to_json(const VectorField& field) {
  Json j;
  if (const FamilyParams* p = field.family_params()) {
    j["kind"] = "family";
    j["params"] = {{"b1", p->b1}, {"b2", p->b2}, {"b3", p->b3}, {"b4", p->b4},
                   {"s", p->s},   {"m", p->m},   {"q", p->q}};
  } else if (const NetworkParams* p = field.network_params()) {
    j["kind"] = "network";
    j["params"]["delta"] = {round12(p->delta1), round12(p->delta2)};
    j["params"]["W"] = matrix_to_json(p->W);
    j["params"]["pi"] = round12(p->pi);
    j["params"]["psi"] = p->psi == PsiKind::Tanh ? "tanh" : "boltzmann";
  } else {
    j["kind"] = "polynomial";
    j["params"]["terms"]["component1"] = terms_to_json(field.component1());
    j["params"]["terms"]["component2"] = terms_to_json(field.component2());
  }
  return j;
}

const char* to_string(Nature n) {
  switch (n) {
    case Nature::Stable: return "stable";
    case Nature::Saddle: return "saddle";
    case Nature::Unstable: return "unstable";
    case Nature::CenterLike: return "center-like";
    default: return "unknown";
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Converged: return "converged";
    case Verdict::Escaped: return "escaped";
    default: return "undecided";
  }
}

Json equilibrium_to_json(const EquilibriumPoint& eq) {
  Json j;
  j["x"] = round12(eq.location.x());
  j["y"] = round12(eq.location.y());
  if (eq.index)
    j["index"] = *eq.index;
  else
    j["index"] = nullptr;
  j["nature"] = to_string(eq.nature);
  j["region"] = to_string(eq.region);
  j["residual"] = round12(eq.residual);
  return j;
}

Json index_result_to_json(const IndexResult& r) {
  Json j;
  j["index"] = r.index;
  j["total_angle_change"] = round12(r.total_angle_change);
  j["samples_used"] = r.samples_used;
  j["max_step_angle"] = round12(r.max_step_angle);
  return j;
}

Json boa_report_to_json(const BoaReport& r) {
  Json j;
  j["n_samples"] = r.n_samples;
  j["n_converged"] = r.n_converged;
  j["converged_fraction"] = round12(r.converged_fraction);
  j["per_equilibrium"] = r.per_equilibrium;
  j["worst_final_distance"] = round12(r.worst_final_distance);
  Json failures = Json::array();
  for (const auto& f : r.failures()) {
    failures.push_back({{"x0", {round12(f.x0.x()), round12(f.x0.y())}},
                        {"verdict", to_string(f.verdict)},
                        {"final_distance", round12(f.final_distance)}});
  }
  j["failures"] = failures;
  return j;
}

Preset preset_by_name(const std::string& name) {
  if (name == "example1") {
    FamilyParams p{1.0, -1.0, 1.0, 0.0, 1, 0, 0};
    return {name, family_to_field(p), {-3, 3, -3, 3}, 1.0, 4.0};
  }
  if (name == "example2" || name == "intro") {
    FamilyParams p{4.0, 3.0, 1.0, -3.0, 1, 1, 0};
    return {name, family_to_field(p), {-4, 4, -4, 4}, 1.0, 4.0};
  }
  if (name == "example3") {
    FamilyParams p{4.0, 3.0, 1.0, 3.0, 1, 1, 0};
    return {name, family_to_field(p), {-5, 5, -5, 5}, 1.0, 4.0};
  }
  if (name == "opinion") {
    NetworkParams p;
    p.delta1 = 0.2;
    p.delta2 = 0.4;
    p.W << 0.0, 0.5, 0.7, 0.0;
    p.pi = 2.0;
    p.psi = PsiKind::Tanh;
    return {name, network_to_field(p), {-8, 8, -8, 8}, 20.0, 8.0};
  }
  throw DomainError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"example1", "example2", "example3", "opinion", "intro"};
}

bool is_preset(const std::string& name) {
  for (const auto& n : preset_names())
    if (n == name) return true;
  return false;
}

VectorField load_system(const std::string& name_or_path) {
  if (is_preset(name_or_path)) return preset_by_name(name_or_path).field;
  std::ifstream in(name_or_path);
  if (!in) throw DomainError("cannot open system file: " + name_or_path);
  Json j;
  in >> j;
  return field_from_json(j);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

void write_region_csv(const std::string& path, const RegionGrid& grid) {
  std::string body = "x,y,label,in_U,in_D0\n";
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Vec2 c = grid.cell_center(i, j);
      const RegionCell& cell = grid.cell(i, j);
      body += format12(c.x()) + "," + format12(c.y()) + "," + to_string(cell.label) + "," +
              (cell.in_U ? "1" : "0") + "," + (cell.in_D0 ? "1" : "0") + "\n";
    }
  }
  write_text_file(path, body);
}

void write_region_svg(const std::string& path, const RegionGrid& grid) {
  // fixed 3-color palette + D0 overlay, one rect per cell
  constexpr int kSize = 640;
  const double sx = static_cast<double>(kSize) / grid.nx;
  const double sy = static_cast<double>(kSize) / grid.ny;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(kSize) + "\" height=\"" + std::to_string(kSize) + "\">\n";
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const RegionCell& cell = grid.cell(i, j);
      const char* color = cell.label == RegionLabel::Omega ? "#2c7fb8"
                          : cell.label == RegionLabel::Omega0 ? "#ffffbf"
                                                              : "#d7301f";
      svg += "<rect x=\"" + format12(i * sx) + "\" y=\"" +
             format12((grid.ny - 1 - j) * sy) + "\" width=\"" + format12(sx) +
             "\" height=\"" + format12(sy) + "\" fill=\"" + color + "\"/>\n";
      if (cell.in_D0)
        svg += "<rect x=\"" + format12(i * sx) + "\" y=\"" +
               format12((grid.ny - 1 - j) * sy) + "\" width=\"" + format12(sx) +
               "\" height=\"" + format12(sy) + "\" fill=\"#ffff33\" fill-opacity=\"0.6\"/>\n";
    }
  }
  svg += "</svg>\n";
  write_text_file(path, svg);
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::string body = "t,x1,x2\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    body += format12(traj.times[i]) + "," + format12(traj.states[i].x()) + "," +
            format12(traj.states[i].y()) + "\n";
  write_text_file(path, body);
}

void write_appendix_csv(const std::string& path, const std::vector<AppendixRow>& rows) {
  std::string body = "theta,f1,f2,phi_deg,dphi_deg\n";
  for (const auto& r : rows) {
    body += format12(r.theta) + "," + format12(r.f1) + "," + format12(r.f2) + "," +
            format12(r.phi_deg) + ",";
    body += r.dphi_deg ? format12(*r.dphi_deg) : std::string("-");
    body += "\n";
  }
  write_text_file(path, body);
}

}  // namespace c2
