#pragma once

// Frozen values from tests/oracle/freeze_references.py (mpmath, 30 digits).

#include <complex>
#include <vector>

namespace ref {

using cd = std::complex<double>;

struct Hg1Case { int k; cd x; cd value; };
inline const std::vector<Hg1Case> kHg1 = {
    {0, {-2.5, 0.0}, {0.03300215319000194, 0.0}},
    {0, {0.0, 0.0}, {0.7511255444649425, 0.0}},
    {0, {0.7, 0.0}, {0.5879093724421046, 0.0}},
    {0, {3.1, 0.0}, {0.006150742507882356, 0.0}},
    {0, {0.5, 0.3}, {0.6855904002065897, -0.10361685463389672}},
    {1, {-2.5, 0.0}, {-0.11668023157203809, 0.0}},
    {1, {0.0, 0.0}, {0.0, 0.0}},
    {1, {0.7, 0.0}, {0.5820005855677156, 0.0}},
    {1, {3.1, 0.0}, {0.02696523676726699, 0.0}},
    {1, {0.5, 0.3}, {0.5287465294365881, 0.21760319210463802}},
    {2, {-2.5, 0.0}, {0.2683645326156876, 0.0}},
    {2, {0.0, 0.0}, {-0.5311259660135984, 0.0}},
    {2, {0.7, 0.0}, {-0.008314294079538848, 0.0}},
    {2, {3.1, 0.0}, {0.0792430022418717, 0.0}},
    {2, {0.5, 0.3}, {-0.28569331401557596, 0.34069373544014453}},
    {5, {-2.5, 0.0}, {-0.49262721027843215, 0.0}},
    {5, {0.0, 0.0}, {0.0, 0.0}},
    {5, {0.7, 0.0}, {0.3272967634985107, 0.0}},
    {5, {3.1, 0.0}, {0.4731359831394817, 0.0}},
    {5, {0.5, 0.3}, {0.6686837494509645, -0.041789170310279455}},
    {10, {-2.5, 0.0}, {0.05096381236221044, 0.0}},
    {10, {0.0, 0.0}, {-0.3726171363829174, 0.0}},
    {10, {0.7, 0.0}, {0.37423314183846923, 0.0}},
    {10, {3.1, 0.0}, {-0.3834351586845155, 0.0}},
    {10, {0.5, 0.3}, {0.514322239498398, 0.5165021183315721}},
    {30, {-2.5, 0.0}, {-0.27662955450847443, 0.0}},
    {30, {0.0, 0.0}, {-0.28549139533060874, 0.0}},
    {30, {0.7, 0.0}, {-0.1945395635670879, 0.0}},
    {30, {3.1, 0.0}, {-6.296169698725774e-05, 0.0}},
    {30, {0.5, 0.3}, {1.080846742295609, -1.013989832372015}},
    {60, {-2.5, 0.0}, {-0.12915237756868775, 0.0}},
    {60, {0.0, 0.0}, {0.2405691931873126, 0.0}},
    {60, {0.7, 0.0}, {0.03813998250163863, 0.0}},
    {60, {3.1, 0.0}, {-0.14999942629552843, 0.0}},
    {60, {0.5, 0.3}, {2.307402668745266, 2.29264927969807}},
};

struct AhgCase { std::vector<std::vector<cd>> theta; std::vector<int> nu; std::vector<double> r; cd value; cd dual; };
inline const std::vector<AhgCase> kAhg = {
    {{{{1.0, 0.0}, {0.3, 0.0}}, {{0.3, 0.0}, {0.8, 0.0}}}, {0, 0}, {0.4, -0.7}, {0.3533615615879684, 0.0}, {0.3533615615879684, 0.0}},
    {{{{1.0, 0.0}, {0.3, 0.0}}, {{0.3, 0.0}, {0.8, 0.0}}}, {1, 0}, {0.4, -0.7}, {0.3730369264705514, 0.0}, {0.19989148512761626, 0.0}},
    {{{{1.0, 0.0}, {0.3, 0.0}}, {{0.3, 0.0}, {0.8, 0.0}}}, {2, 1}, {0.4, -0.7}, {0.22792946725427474, 0.0}, {0.08339332853476052, 0.0}},
    {{{{1.0, 0.0}, {0.3, 0.0}}, {{0.3, 0.0}, {0.8, 0.0}}}, {3, 2}, {-1.1, 0.5}, {0.5051190043829132, 0.0}, {-0.1740508401477081, 0.0}},
    {{{{1.0, 0.2}, {0.3, 0.0}}, {{0.3, 0.0}, {0.8, -0.1}}}, {2, 1}, {0.4, -0.7}, {0.2320470320618247, -0.014554422840199161}, {0.08549512453033101, 0.047048880239833266}},
    {{{{1.0, 0.2}, {0.3, 0.0}}, {{0.3, 0.0}, {0.8, -0.1}}}, {0, 3}, {0.9, 0.2}, {0.0999460683441752, -0.044458963669930296}, {-0.11122799807555574, 0.0074636355644438195}},
    {{{{1.0, 0.0}, {0.2, 0.0}, {-0.1, 0.0}}, {{0.2, 0.0}, {0.9, 0.0}, {0.15, 0.0}}, {{-0.1, 0.0}, {0.15, 0.0}, {0.7, 0.0}}}, {1, 1, 1}, {0.3, -0.2, 0.5}, {0.03983390861820727, 0.0}, {-0.11053094606829433, 0.0}},
    {{{{1.0, 0.0}, {0.2, 0.0}, {-0.1, 0.0}}, {{0.2, 0.0}, {0.9, 0.0}, {0.15, 0.0}}, {{-0.1, 0.0}, {0.15, 0.0}, {0.7, 0.0}}}, {2, 0, 1}, {-0.6, 0.4, 0.1}, {0.10854008430663899, 0.0}, {-0.0514909469955344, 0.0}},
};

// Theta = [[0.6, 0.15], [0.15, 0.5]], nu = (1, 2), zeta = (0.4, -0.2)
inline const cd kFourier2d = {0.0, -0.41027241657220476};
inline const cd kLctFrft07 = {0.23603599461041358, -0.6109259323342584};  // kernel (2 pi i b)^(-n/2), gamma = 0.7

// Theta = 0.8, nu = 3, two-sided Laplace at zeta = 0.6
inline const cd kLaplace1d = {-3.1842819444017016, 0.0};

// Theta = 1.3, (nu, mu) = (2, 1), (r, zeta) = (0.3, -0.4)
inline const cd kWvdPair1d = {-0.1551688243815109, 0.2689592955946189};

// numpy hermgauss(20): largest node and its weight
inline constexpr double kGh20Node = 5.387480890011233;
inline constexpr double kGh20Weight = 2.2293936455341447e-13;

}  // namespace ref
