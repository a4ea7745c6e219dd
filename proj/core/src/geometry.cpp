#include "basketweave/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bw {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfHeight = 0.35355339059327373;   // edge/2 = 1/(2*sqrt(2))
}  // namespace

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i) r.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
    return r;
}

Mat3 Mat3::rot_x(double a) {
    Mat3 r = identity();
    r.m[1][1] = std::cos(a);
    r.m[1][2] = -std::sin(a);
    r.m[2][1] = std::sin(a);
    r.m[2][2] = std::cos(a);
    return r;
}

Mat3 Mat3::rot_z(double a) {
    Mat3 r = identity();
    r.m[0][0] = std::cos(a);
    r.m[0][1] = -std::sin(a);
    r.m[1][0] = std::sin(a);
    r.m[1][1] = std::cos(a);
    return r;
}

Mat3 Mat3::axis_angle(const Vec3& axis, double angle) {
    const double n = std::sqrt(axis.x * axis.x + axis.y * axis.y + axis.z * axis.z);
    const double ux = axis.x / n, uy = axis.y / n, uz = axis.z / n;
    const double c = std::cos(angle), s = std::sin(angle), t = 1 - c;
    Mat3 r;
    r.m = {{{t * ux * ux + c, t * ux * uy - s * uz, t * ux * uz + s * uy},
            {t * ux * uy + s * uz, t * uy * uy + c, t * uy * uz - s * ux},
            {t * ux * uz - s * uy, t * uy * uz + s * ux, t * uz * uz + c}}};
    return r;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    return Vec3{m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k)
                s += m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     o.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
            r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    return r;
}

double Mat3::distance(const Mat3& o) const {
    double d = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d = std::max(d, std::abs(m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                     o.m[static_cast<size_t>(i)][static_cast<size_t>(j)]));
    return d;
}

namespace {

// reference cube vertices: diagonal k runs from top vertex k to its antipode
Vec3 top_vertex(int k) {
    return Vec3{0.5 * std::cos(k * kPi / 2), 0.5 * std::sin(k * kPi / 2), kHalfHeight};
}

bool maps_cube_to_itself(const Mat3& g) {
    for (int k = 0; k < 4; ++k) {
        for (int sign = -1; sign <= 1; sign += 2) {
            const Vec3 v0 = top_vertex(k);
            const Vec3 v = g * Vec3{sign * v0.x, sign * v0.y, sign * v0.z};
            bool hit = false;
            for (int k2 = 0; k2 < 4 && !hit; ++k2) {
                const Vec3 w = top_vertex(k2);
                for (int s2 = -1; s2 <= 1 && !hit; s2 += 2) {
                    if (std::abs(v.x - s2 * w.x) < 1e-9 && std::abs(v.y - s2 * w.y) < 1e-9 &&
                        std::abs(v.z - s2 * w.z) < 1e-9)
                        hit = true;
                }
            }
            if (!hit) return false;
        }
    }
    return true;
}

std::vector<Mat3> generate_group() {
    const Mat3 g1 = Mat3::rot_z(kPi / 2);
    const Mat3 g2 = Mat3::axis_angle(top_vertex(0), 2 * kPi / 3);
    std::vector<Mat3> group{Mat3::identity()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat3> next = group;
        for (const Mat3& g : group) {
            for (const Mat3* gen : {&g1, &g2}) {
                const Mat3 h = *gen * g;
                bool known = false;
                for (const Mat3& k : next)
                    if (h.distance(k) < 1e-9) known = true;
                if (!known) {
                    next.push_back(h);
                    grew = true;
                }
            }
        }
        group = std::move(next);
    }
    for (const Mat3& g : group) {
        if (!maps_cube_to_itself(g))
            throw std::logic_error("cube_rotation_group: generator closure left the group");
    }
    std::sort(group.begin(), group.end(), [](const Mat3& a, const Mat3& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double x = a.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                const double y = b.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (std::abs(x - y) > 1e-9) return x < y;
            }
        return false;
    });
    return group;
}

// Colours of the four diagonals, chosen so that the phase shift composition
// exchanges Y and G while R and B keep their top-face positions.
constexpr std::array<Color, 4> kDiagonalColors{Color::R, Color::B, Color::Y, Color::G};

Color diagonal_color(const Vec3& vertex) {
    for (int k = 0; k < 4; ++k) {
        const Vec3 w = top_vertex(k);
        for (int sign = -1; sign <= 1; sign += 2) {
            if (std::abs(vertex.x - sign * w.x) < 1e-6 &&
                std::abs(vertex.y - sign * w.y) < 1e-6 &&
                std::abs(vertex.z - sign * w.z) < 1e-6)
                return kDiagonalColors[static_cast<size_t>(k)];
        }
    }
    throw std::logic_error("diagonal_color: not a cube vertex");
}

std::array<ProjectedVertex, 4> project_pose(const Mat3& pose, double cx, double cy) {
    std::array<ProjectedVertex, 4> out;
    int found = 0;
    for (int k = 0; k < 4; ++k) {
        for (int sign = -1; sign <= 1; sign += 2) {
            const Vec3 v0 = top_vertex(k);
            const Vec3 v = pose * Vec3{sign * v0.x, sign * v0.y, sign * v0.z};
            if (v.z > 1e-6) {
                if (found == 4) throw std::logic_error("project_pose: top face not level");
                out[static_cast<size_t>(found++)] = ProjectedVertex{
                    cx + 0.5 + v.x, cy + 0.5 + v.y,
                    kDiagonalColors[static_cast<size_t>(k)]};
            }
        }
    }
    if (found != 4) throw std::logic_error("project_pose: top face not level");
    std::sort(out.begin(), out.end(), [cx, cy](const ProjectedVertex& a, const ProjectedVertex& b) {
        return std::atan2(a.y - cy - 0.5, a.x - cx - 0.5) <
               std::atan2(b.y - cy - 0.5, b.x - cx - 0.5);
    });
    return out;
}

Mat3 mounted_pose(int orientation) {
    const auto& group = cube_rotation_group();
    if (orientation < 0 || orientation >= static_cast<int>(group.size()))
        throw std::invalid_argument("orientation index out of range");
    return Mat3::rot_z(kMountAngle) * group[static_cast<size_t>(orientation)];
}

}  // namespace

const std::vector<Mat3>& cube_rotation_group() {
    static const std::vector<Mat3> group = generate_group();
    return group;
}

MountOffsets mount_offsets() {
    return MountOffsets{0.5 - 0.5 * std::cos(kMountAngle), 0.5 - 0.5 * std::sin(kMountAngle)};
}

std::array<ProjectedVertex, 4> top_face_projection(const Molecule& m) {
    return project_pose(mounted_pose(m.orientation), m.cx, m.cy);
}

PhaseShift phase_shift_permutation() {
    // vertical by pi + pi/12, horizontal (left-to-right) by a quarter turn,
    // vertical by -pi/12; the literal middle angle pi/4 cannot map any valid
    // pose to a valid pose (cube rotations have z-x-z middle angle 0, pi/2
    // or pi), so the quarter turn is the consistent reading
    const Mat3 composition =
        Mat3::rot_z(-kPi / 12) * Mat3::rot_x(kPi / 2) * Mat3::rot_z(kPi + kPi / 12);

    PhaseShift out;
    out.pose = composition * Mat3::rot_z(kMountAngle);

    double best = std::numeric_limits<double>::infinity();
    for (const Mat3& g : cube_rotation_group())
        best = std::min(best, out.pose.distance(Mat3::rot_z(kMountAngle) * g));
    out.group_distance = best;

    const auto before = project_pose(Mat3::rot_z(kMountAngle), 0, 0);
    const auto after = project_pose(out.pose, 0, 0);
    for (int k = 0; k < 4; ++k) {
        // positions coincide for a valid pose of the same mounting family
        const auto& pre = before[static_cast<size_t>(k)];
        const auto& post = after[static_cast<size_t>(k)];
        if (std::hypot(pre.x - post.x, pre.y - post.y) > 1e-9)
            throw std::logic_error("phase_shift_permutation: top-face positions moved");
        out.permutation[static_cast<size_t>(pre.color)] = post.color;
    }
    return out;
}

RotationBound free_rotation_bound() {
    RotationBound rb;
    rb.molecule_diameter = kMoleculeEdge * std::sqrt(3.0);
    rb.free_rotation_limit = 1.0 / std::sqrt(3.0);
    rb.can_rotate_freely = rb.molecule_diameter <= rb.free_rotation_limit;
    return rb;
}

std::array<Molecule, 4> default_four_cell_config() {
    return {Molecule{0, 0, 0}, Molecule{1, 0, 0}, Molecule{0, 1, 0}, Molecule{1, 1, 0}};
}

FourCellDistances four_cell_distances(const std::array<Molecule, 4>& config) {
    for (const Molecule& m : config) {
        if (m.cx < 0 || m.cx > 1 || m.cy < 0 || m.cy > 1)
            throw std::invalid_argument("four_cell_distances: cells must tile [0,2]x[0,2]");
    }
    auto vertices_of_cell = [&](int cx, int cy) {
        for (const Molecule& m : config)
            if (m.cx == cx && m.cy == cy) return top_face_projection(m);
        throw std::invalid_argument("four_cell_distances: missing cell");
    };

    const auto v00 = vertices_of_cell(0, 0);
    const auto v10 = vertices_of_cell(1, 0);
    const auto v01 = vertices_of_cell(0, 1);
    const auto v11 = vertices_of_cell(1, 1);

    // vertices are addressed by their angular position about the cell
    // centre; b and c sit at the position antipodal to a's
    auto vertex_at = [](const std::array<ProjectedVertex, 4>& vs, double cx, double cy,
                        double angle) {
        const ProjectedVertex* best = &vs[0];
        double best_err = 10.0;
        for (const ProjectedVertex& v : vs) {
            double err = std::abs(
                std::remainder(std::atan2(v.y - cy, v.x - cx) - angle, 2 * kPi));
            if (err < best_err) {
                best_err = err;
                best = &v;
            }
        }
        return *best;
    };

    const ProjectedVertex a = vertex_at(v00, 0.5, 0.5, kMountAngle);
    const ProjectedVertex b = vertex_at(v10, 1.5, 0.5, kMountAngle + kPi);
    const ProjectedVertex c = vertex_at(v11, 1.5, 1.5, kMountAngle + kPi);
    const ProjectedVertex d = vertex_at(v10, 1.5, 0.5, kMountAngle);
    const ProjectedVertex e = vertex_at(v01, 0.5, 1.5, kMountAngle);

    FourCellDistances out;
    out.ab = std::hypot(a.x - b.x, a.y - b.y);
    out.ac = std::hypot(a.x - c.x, a.y - c.y);
    out.ad = std::hypot(a.x - d.x, a.y - d.y);
    out.ae = std::hypot(a.x - e.x, a.y - e.y);
    out.rect_p = std::min(1.0 - a.x, 1.0 - a.y);
    out.rect_q = std::max(1.0 - a.x, 1.0 - a.y);
    return out;
}

double min_same_color_distance(const std::vector<Molecule>& config) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < config.size(); ++i) {
        const auto vi = top_face_projection(config[i]);
        for (size_t j = i + 1; j < config.size(); ++j) {
            const auto vj = top_face_projection(config[j]);
            for (const ProjectedVertex& p : vi)
                for (const ProjectedVertex& q : vj)
                    if (p.color == q.color)
                        best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
        }
    }
    return best;
}

}  // namespace bw
