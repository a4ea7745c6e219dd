#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basketweave/coloring.hpp"

namespace bw {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity();
    static Mat3 rot_x(double angle);
    static Mat3 rot_z(double angle);
    static Mat3 axis_angle(const Vec3& axis, double angle);

    Vec3 operator*(const Vec3& v) const;
    Mat3 operator*(const Mat3& o) const;
    double distance(const Mat3& o) const;   // max absolute entry difference
};

// The molecule is a cube of edge 1/sqrt(2) whose four space diagonals carry
// the colours; opposite vertices share a colour. In the reference pose the
// top-face vertices project onto the axes (angles k*90deg) at radius 1/2;
// mounting rotates by pi/6 about the vertical, placing them at pi/6 + k*pi/2.
inline constexpr double kMoleculeEdge = 0.7071067811865476;          // 1/sqrt(2)
inline constexpr double kMountAngle = 0.5235987755982988;            // pi/6

// The 24 rotations of the reference cube, deterministic order (closure from
// the generators, sorted by matrix entries).
const std::vector<Mat3>& cube_rotation_group();

struct Molecule {
    int cx = 0, cy = 0;        // unit cell (cell spans [cx,cx+1] x [cy,cy+1])
    int orientation = 0;       // index into cube_rotation_group()
};

struct ProjectedVertex {
    double x = 0, y = 0;       // absolute plane coordinates
    Color color = Color::R;
};

// Mounting offsets: every top-face vertex projects at distances {p, q} from
// the two nearest cell edges, p = 1/2 - cos(pi/6)/2, q = 1/2 - sin(pi/6)/2.
struct MountOffsets {
    double p = 0, q = 0;
};
MountOffsets mount_offsets();

// The four top-face vertices of the mounted molecule, sorted by angle about
// the cell centre. Throws on an invalid orientation index.
std::array<ProjectedVertex, 4> top_face_projection(const Molecule& m);

// Composition of the three phase-shift rotations applied to the identity-
// mounted molecule: about the vertical axis by pi + pi/12, about the
// horizontal left-to-right axis by pi/2, about the vertical axis by -pi/12.
// Returns the induced permutation of top-face colours (image indexed by
// colour) and the composed pose.
struct PhaseShift {
    std::array<Color, kColorCount> permutation{};
    Mat3 pose;                  // composed orientation of the molecule
    double group_distance = 0;  // distance from the nearest valid pose
};
PhaseShift phase_shift_permutation();

struct RotationBound {
    double molecule_diameter = 0;   // space diagonal of the cube
    double free_rotation_limit = 0; // largest diameter that could rotate freely
    bool can_rotate_freely = false;
};
RotationBound free_rotation_bound();

// The five labelled points of the four-cell configuration: a is the vertex
// of cell (0,0) nearest the central corner, b/c the nearest vertices of the
// right and diagonal cells, d/e the corresponding vertices of the right and
// upper cells.
struct FourCellDistances {
    double ab = 0, ac = 0;      // sqrt(2 - sqrt(3))
    double ad = 0, ae = 0;      // 1
    double rect_p = 0, rect_q = 0;
};
FourCellDistances four_cell_distances(const std::array<Molecule, 4>& config);

// Four identity-oriented molecules on the 2x2 cells; satisfies the
// same-colour distance rule with minimum exactly 1.
std::array<Molecule, 4> default_four_cell_config();

// Minimum distance between same-coloured projected top-face vertices of
// distinct molecules; +infinity when no such pair exists. The placement
// rule holds iff the result is >= 1 - 1e-9.
double min_same_color_distance(const std::vector<Molecule>& config);

}  // namespace bw
