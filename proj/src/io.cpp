#include "hpfem/io.hpp"

#include <fmt/format.h>

#include <iterator>

namespace hpfem {

std::string format_double(double value) { return fmt::format("{:.17g}", value); }

std::string csv_row(const SweepRecord& r) {
  return fmt::format("{},{},{},{},{},{},{}", format_double(r.eps), r.p, r.n_dofs, format_double(r.err_energy_abs),
                     format_double(r.err_energy_rel), format_double(r.err_l2), format_double(r.runtime_ms));
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << sweep_csv_header << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

std::string records_json(const std::vector<SweepRecord>& records) {
  std::string out = "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    fmt::format_to(std::back_inserter(out),
                   "{}\n  {{\"eps\": {}, \"p\": {}, \"N\": {}, \"err_energy_abs\": {}, \"err_energy_rel\": {}, "
                   "\"err_l2\": {}, \"runtime_ms\": {}}}",
                   i == 0 ? "" : ",", format_double(r.eps), r.p, r.n_dofs, format_double(r.err_energy_abs),
                   format_double(r.err_energy_rel), format_double(r.err_l2), format_double(r.runtime_ms));
  }
  out += "\n]\n";
  return out;
}

std::string mesh_json(const LayerMesh& mesh, int degree, double eps, double kappa) {
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "{{\n  \"regime\": \"{}\",\n  \"m\": {},\n  \"p\": {},\n  \"eps\": {},\n  \"kappa\": {},\n",
                 to_string(mesh.regime()), mesh.sectors(), degree, format_double(eps), format_double(kappa));
  fmt::format_to(it, "  \"w_bl\": {},\n  \"w_il\": {},\n  \"elements\": [", format_double(mesh.boundary_needle_width()),
                 format_double(mesh.interface_needle_width()));
  const auto& elements = mesh.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Element& e = elements[i];
    fmt::format_to(it, "{}\n    {{\"r0\": {}, \"r1\": {}, \"t0\": {}, \"t1\": {}, \"region\": \"{}\", \"band\": \"{}\"}}",
                   i == 0 ? "" : ",", format_double(e.r0), format_double(e.r1), format_double(e.t0),
                   format_double(e.t1), to_string(e.region), to_string(e.band));
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string solution_json(const FeSpace& space, const std::vector<double>& coefficients, double eps) {
  std::string x, y, v;
  for (std::size_t k = 0; k < space.dof_count(); ++k) {
    const Vec2 pt = space.node_point(space.free_node(k));
    const char* sep = k == 0 ? "" : ", ";
    x += sep + format_double(pt.x);
    y += sep + format_double(pt.y);
    v += sep + format_double(coefficients.at(k));
  }
  return fmt::format("{{\n  \"eps\": {},\n  \"p\": {},\n  \"N\": {},\n  \"x\": [{}],\n  \"y\": [{}],\n  \"value\": [{}]\n}}\n",
                     format_double(eps), space.degree(), space.dof_count(), x, y, v);
}

}  // namespace hpfem
