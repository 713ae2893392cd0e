#include "hoikit/geom/mesh.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hoikit::geom {

void Mesh::validate() const {
  const int nv = static_cast<int>(vertices.size());
  for (const auto& v : vertices) {
    if (!v.allFinite())
      throw std::invalid_argument("mesh has non-finite vertex coordinates");
  }
  for (const auto& f : faces) {
    for (int idx : f) {
      if (idx < 0 || idx >= nv)
        throw std::invalid_argument("mesh face index out of range: " +
                                    std::to_string(idx));
    }
  }
}

double Mesh::face_area(int face) const {
  const auto& f = faces.at(static_cast<std::size_t>(face));
  const Vec3 e1 = vertices[f[1]] - vertices[f[0]];
  const Vec3 e2 = vertices[f[2]] - vertices[f[0]];
  return 0.5 * e1.cross(e2).norm();
}

Vec3 Mesh::centroid() const {
  Vec3 c = Vec3::Zero();
  for (const auto& v : vertices) c += v;
  return vertices.empty() ? c : Vec3(c / static_cast<double>(vertices.size()));
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line,
                             const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line) +
                           ": OBJ parse error: " + what);
}

// An `f` entry may be "i", "i/t", "i/t/n" or "i//n"; only the vertex index
// is used.
int face_entry_index(const std::string& tok, const std::string& name, int line,
                     int vertex_count) {
  const std::size_t slash = tok.find('/');
  const std::string head = slash == std::string::npos ? tok : tok.substr(0, slash);
  int idx = 0;
  const auto ec = std::from_chars(head.data(), head.data() + head.size(), idx);
  if (ec.ec != std::errc() || ec.ptr != head.data() + head.size())
    parse_fail(name, line, "bad face index '" + tok + "'");
  if (idx < 1 || idx > vertex_count)
    parse_fail(name, line,
               "face index " + std::to_string(idx) + " out of range [1, " +
                   std::to_string(vertex_count) + "]");
  return idx - 1;
}

}  // namespace

Mesh parse_obj(std::istream& in, const std::string& name) {
  Mesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag.empty() || tag[0] == '#') continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ls >> v.x() >> v.y() >> v.z()))
        parse_fail(name, line_no, "expected 'v x y z'");
      if (!v.allFinite())
        parse_fail(name, line_no, "non-finite vertex coordinate");
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok)
        idx.push_back(face_entry_index(tok, name, line_no,
                                       static_cast<int>(mesh.vertices.size())));
      if (idx.size() < 3) parse_fail(name, line_no, "face with fewer than 3 vertices");
      for (std::size_t k = 1; k + 1 < idx.size(); ++k)
        mesh.faces.push_back({idx[0], idx[k], idx[k + 1]});
    }
    // vn / vt / o / g / usemtl / s records are ignored.
  }
  return mesh;
}

Mesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open OBJ file: " + path);
  return parse_obj(in, path);
}

void write_obj(const Mesh& mesh, std::ostream& out) {
  char buf[96];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out << buf;
  }
  for (const auto& f : mesh.faces)
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void save_obj(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write OBJ file: " + path);
  write_obj(mesh, out);
}

std::vector<SurfacePoint> sample_surface(const Mesh& mesh, int count,
                                         std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_surface: count must be >= 1");
  const int nf = static_cast<int>(mesh.faces.size());
  if (nf == 0) throw std::invalid_argument("sample_surface: mesh has no faces");

  std::vector<double> cumulative(static_cast<std::size_t>(nf));
  double total = 0.0;
  for (int f = 0; f < nf; ++f) {
    total += mesh.face_area(f);
    cumulative[static_cast<std::size_t>(f)] = total;
  }
  if (!(total > 0.0))
    throw std::invalid_argument("sample_surface: all faces degenerate (zero area)");

  RandomStream rng(seed);
  std::vector<SurfacePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double target = rng.uniform() * total;
    const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), target);
    int face = static_cast<int>(it - cumulative.begin());
    if (face >= nf) face = nf - 1;
    // sqrt trick gives exactly uniform density over the triangle interior.
    const double su = std::sqrt(rng.uniform());
    const double v = rng.uniform();
    SurfacePoint sp;
    sp.face_index = face;
    sp.barycentric = Vec3(1.0 - su, su * (1.0 - v), su * v);
    out.push_back(sp);
  }
  return out;
}

Vec3 locate(const Mesh& mesh, const SurfacePoint& sp) {
  if (sp.face_index < 0 ||
      sp.face_index >= static_cast<int>(mesh.faces.size()))
    throw std::invalid_argument("locate: face index out of range");
  const auto& f = mesh.faces[static_cast<std::size_t>(sp.face_index)];
  return sp.barycentric[0] * mesh.vertices[f[0]] +
         sp.barycentric[1] * mesh.vertices[f[1]] +
         sp.barycentric[2] * mesh.vertices[f[2]];
}

std::vector<Vec3> locate_all(const Mesh& mesh,
                             const std::vector<SurfacePoint>& sps) {
  std::vector<Vec3> out;
  out.reserve(sps.size());
  for (const auto& sp : sps) out.push_back(locate(mesh, sp));
  return out;
}

}  // namespace hoikit::geom
