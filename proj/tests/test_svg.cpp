#include <fstream>
#include <sstream>

#include "doctest.h"
#include "testdata.hpp"
#include "trop/reciprocal.hpp"
#include "trop/svg.hpp"

using namespace trop;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("curve rendering is deterministic and matches the golden file") {
    Curve c = build_curve(parse_polynomial("x + y + 0"));
    std::string first = render_curve_svg(c);
    std::string second = render_curve_svg(build_curve(parse_polynomial("x + y + 0")));
    CHECK(first == second);
    CHECK(first == read_file(std::string(TROP_GOLDEN_DIR) + "/line_curve.svg"));
    // No weight labels for unit weights.
    CHECK(first.find("<text") == std::string::npos);
}

TEST_CASE("weight labels appear for weights above one") {
    Curve c = build_curve(parse_polynomial("(2) x + y^2 + (4)"));
    std::string svg = render_curve_svg(c);
    CHECK(svg.find(">2</text>") != std::string::npos);
}

TEST_CASE("subdivision and framework renderings") {
    Curve c = build_curve(parse_polynomial("0 + x^8 + y^8 + (1) x y + (1) x^5 y + (1) x y^5"));
    std::string sd = render_subdivision_svg(c.sd);
    CHECK(sd.find("<svg") == 0);
    CHECK(sd.find("</svg>") != std::string::npos);

    DualGraph dg = dual_graph(c);
    Framework fw = build_reciprocal(dg, c.lattice_weighting.values).framework;
    std::string fsvg = render_framework_svg(fw, true);
    // Lattice overlay present.
    CHECK(fsvg.find("#cccccc") != std::string::npos);

    Framework f3 = make_framework(3, {{"a", testdata::rv({0, 0, 0})}}, {});
    CHECK_THROWS_AS(render_framework_svg(f3, false), TropError);
}

TEST_CASE("rays are clipped to the padded viewbox") {
    Curve c = build_curve(parse_polynomial("x + y + 0"));
    std::string svg = render_curve_svg(c);
    // Every coordinate stays within the declared width/height.
    std::size_t wpos = svg.find("width=\"");
    REQUIRE(wpos != std::string::npos);
    double width = std::stod(svg.substr(wpos + 7));
    std::size_t pos = 0;
    while ((pos = svg.find("x2=\"", pos)) != std::string::npos) {
        pos += 4;
        double v = std::stod(svg.substr(pos));
        CHECK(v >= -0.01);
        CHECK(v <= width + 0.01);
    }
}
