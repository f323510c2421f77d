#pragma once
// Generated by generate_references.py (mpmath, 40 digits). Do not edit.

namespace kelvin::ref {

inline constexpr double kJ4_0p4 = 6.6135107729096769115e-5;
inline constexpr double kY1_1 = -7.8121282130028871655e-1;
inline constexpr double kK2_0p01 = 1.9999500068389410624e+4;
inline constexpr double kStruveH0_1 = 5.6865662704828795099e-1;
inline constexpr double kScaledK0_0p4 = 8.5617428229042572668e-1;
inline constexpr double kScaledK0_1_integral = 4.80399662832610993e-1;
inline constexpr double kScaledH40_1 = 1.0788685923751629233e-49;
inline constexpr double kKummer_half_3half_m025 = 9.2256201282558489751e-1;
inline constexpr double kUpperGamma_2p5_4 = 2.0769032981158048375e-1;
inline constexpr double kE1_2 = 4.8900510708061119567e-2;
inline constexpr double kUpperGamma_10_10 = 1.6617353478754572935e+5;
inline constexpr double kRemainderBound_12_12p5 = 3.7088332541404637037;
inline constexpr double kSaddleAlpha0_M8 = 4.1776070352087508299e-5;

// Rows follow (x, rho) = (0.4, 0.005), (1.0, 0.02) and alpha / pi =
// 0, 0.10, 0.20, 0.25, 0.30, 0.40.
inline constexpr double kF[] = {
    1.9770544817441453298,
    1.9714934260164405822,
    1.9566443096871840924,
    1.9481009943255875009,
    1.9421621743569309987,
    1.9673221448197086991,
    -2.2236109042673632208e-1,
    -2.2563029402340034561e-1,
    -2.346780241156221406e-1,
    -2.4090765224596765004e-1,
    -2.4825644771826929207e-1,
    -2.6438914716191451224e-1};
inline constexpr double kI1[] = {
    3.9163177083856247587e-1,
    3.8672458317141206992e-1,
    3.7214261008634465276e-1,
    3.6134197072324596609e-1,
    3.4829703056778303416e-1,
    3.1584897065621922425e-1,
    8.8170515766676865173e-1,
    8.6955072576752335147e-1,
    8.3368044794305687259e-1,
    8.0734385768690058922e-1,
    7.7578847301394811394e-1,
    6.9843656971635110369e-1};
inline constexpr double kI2[] = {
    1.3776719615177716153,
    1.3699952679999022503,
    1.3483590467500032071,
    1.3331395944211373989,
    1.3153837027754205555,
    1.2732718665532253722,
    7.7163073894985514658e-1,
    7.5785894997018539364e-1,
    7.1750043020093040359e-1,
    6.8808249607827632138e-1,
    6.5303544593509871869e-1,
    5.6793586328440905047e-1};
inline constexpr double kCurlyF[] = {
    6.3679902361684461458e-6,
    -2.8960876232494198994e-5,
    -8.3247581456467485524e-4,
    -4.6872928693957127732e-4,
    2.9761965810111040836e-3,
    4.3259421983396662825e-2,
    2.6081838725302017592e-7,
    -1.9884547232481450414e-6,
    1.8988068153847988913e-5,
    1.4283246850618905191e-5,
    -2.8845467727549040463e-4,
    -7.9280387060351490866e-4};

// C_k(x, 0) for k = 0..6 at x = 0.4, 1.0, 2.0.
inline constexpr double kCkAlpha0[] = {
    8.5617428229042572668e-1,
    5.8879794855314651745e-1,
    3.7741616070861668753,
    7.6094209086827638765e+1,
    3.2024880536454532262e+3,
    2.3076062650160305644e+5,
    2.5393373508098870203e+7,
    4.80399662832610993e-1,
    4.9927049466962212248e-1,
    3.594501076711291819,
    7.4648687610521672933e+1,
    3.1716638041924669737e+3,
    2.2943987271160515086e+5,
    2.5297496115638725157e+7,
    2.8048317685835077296e-1,
    3.856596122155962362e-1,
    3.1997062470760551804,
    7.0511513357315661071e+1,
    3.0729828741444253277e+3,
    2.2500113801961967867e+5,
    2.4967711501925216565e+7};
inline constexpr double kC0_x1_pi6 = 4.588288896541049191e-1;

}  // namespace kelvin::ref
