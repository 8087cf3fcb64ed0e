"""Published reference measurements used by the reproduction harness.

``ATTACK_ROUNDS`` maps ``(scheme, tpr, tnr)`` to the mean rounds needed by
the points attack (cells that exceeded 200,000 rounds are absent).
"""

ATTACK_ROUNDS: dict[tuple[str, float, float], float] = {
    ('bc', 1.0, 1.0): 165.978,
    ('bc', 0.95, 1.0): 262.996,
    ('bc', 0.9, 1.0): 345.96,
    ('bc', 0.85, 1.0): 451.254,
    ('bc', 0.8, 1.0): 565.272,
    ('bc', 0.75, 1.0): 678.194,
    ('bc', 0.7, 1.0): 823.412,
    ('bc', 0.65, 1.0): 982.746,
    ('bc', 0.6, 1.0): 1235.992,
    ('bc', 1.0, 0.95): 174.384,
    ('bc', 0.95, 0.95): 280.342,
    ('bc', 0.9, 0.95): 385.178,
    ('bc', 0.85, 0.95): 488.884,
    ('bc', 0.8, 0.95): 612.682,
    ('bc', 0.75, 0.95): 766.068,
    ('bc', 0.7, 0.95): 922.54,
    ('bc', 0.65, 0.95): 1120.09,
    ('bc', 0.6, 0.95): 1342.758,
    ('bc', 1.0, 0.9): 181.922,
    ('bc', 0.95, 0.9): 294.812,
    ('bc', 0.9, 0.9): 416.188,
    ('bc', 0.85, 0.9): 524.556,
    ('bc', 0.8, 0.9): 676.894,
    ('bc', 0.75, 0.9): 846.6,
    ('bc', 0.7, 0.9): 1025.982,
    ('bc', 0.65, 0.9): 1286.478,
    ('bc', 0.6, 0.9): 1580.582,
    ('bc', 1.0, 0.85): 193.792,
    ('bc', 0.95, 0.85): 320.708,
    ('bc', 0.9, 0.85): 459.76,
    ('bc', 0.85, 0.85): 594.082,
    ('bc', 0.8, 0.85): 776.85,
    ('bc', 0.75, 0.85): 971.874,
    ('bc', 0.7, 0.85): 1178.938,
    ('bc', 0.65, 0.85): 1483.118,
    ('bc', 0.6, 0.85): 1891.29,
    ('bc', 1.0, 0.8): 207.03,
    ('bc', 0.95, 0.8): 355.722,
    ('bc', 0.9, 0.8): 508.42,
    ('bc', 0.85, 0.8): 675.65,
    ('bc', 0.8, 0.8): 867.42,
    ('bc', 0.75, 0.8): 1077.646,
    ('bc', 0.7, 0.8): 1377.088,
    ('bc', 0.65, 0.8): 1761.734,
    ('bc', 0.6, 0.8): 2242.302,
    ('bc', 1.0, 0.75): 216.218,
    ('bc', 0.95, 0.75): 381.012,
    ('bc', 0.9, 0.75): 549.34,
    ('bc', 0.85, 0.75): 730.038,
    ('bc', 0.8, 0.75): 960.94,
    ('bc', 0.75, 0.75): 1227.158,
    ('bc', 0.7, 0.75): 1629.738,
    ('bc', 0.65, 0.75): 2094.498,
    ('bc', 0.6, 0.75): 2808.506,
    ('bc', 1.0, 0.7): 234.262,
    ('bc', 0.95, 0.7): 440.108,
    ('bc', 0.9, 0.7): 624.56,
    ('bc', 0.85, 0.7): 836.196,
    ('bc', 0.8, 0.7): 1115.732,
    ('bc', 0.75, 0.7): 1476.358,
    ('bc', 0.7, 0.7): 1949.384,
    ('bc', 0.65, 0.7): 2522.53,
    ('bc', 0.6, 0.7): 3340.99,
    ('bc', 1.0, 0.65): 258.334,
    ('bc', 0.95, 0.65): 475.66,
    ('bc', 0.9, 0.65): 685.86,
    ('bc', 0.85, 0.65): 989.504,
    ('bc', 0.8, 0.65): 1331.37,
    ('bc', 0.75, 0.65): 1754.882,
    ('bc', 0.7, 0.65): 2372.312,
    ('bc', 0.65, 0.65): 3243.77,
    ('bc', 0.6, 0.65): 4297.246,
    ('bc', 1.0, 0.6): 279.748,
    ('bc', 0.95, 0.6): 522.326,
    ('bc', 0.9, 0.6): 803.298,
    ('bc', 0.85, 0.6): 1157.238,
    ('bc', 0.8, 0.6): 1586.432,
    ('bc', 0.75, 0.6): 2203.824,
    ('bc', 0.7, 0.6): 2940.524,
    ('bc', 0.65, 0.6): 4112.454,
    ('bc', 0.6, 0.6): 5987.648,
    ('bc', 1.0, 0.55): 303.129,
    ('bc', 0.95, 0.55): 616.505,
    ('bc', 0.9, 0.55): 948.832,
    ('bc', 0.85, 0.55): 1348.1,
    ('bc', 0.8, 0.55): 1911.934,
    ('bc', 0.75, 0.55): 2778.192,
    ('bc', 0.7, 0.55): 3909.067,
    ('bc', 0.65, 0.55): 5627.87,
    ('bc', 0.6, 0.55): 8521.225,
    ('bc', 1.0, 0.5): 330.702,
    ('bc', 0.95, 0.5): 705.391,
    ('bc', 0.9, 0.5): 1126.371,
    ('bc', 0.85, 0.5): 1661.984,
    ('bc', 0.8, 0.5): 2392.133,
    ('bc', 0.75, 0.5): 3593.075,
    ('bc', 0.7, 0.5): 5396.283,
    ('bc', 0.65, 0.5): 8248.908,
    ('bc', 0.6, 0.5): 13557.03,
    ('bc', 1.0, 0.45): 369.793,
    ('bc', 0.95, 0.45): 829.916,
    ('bc', 0.9, 0.45): 1344.85,
    ('bc', 0.85, 0.45): 2093.507,
    ('bc', 0.8, 0.45): 3149.585,
    ('bc', 0.75, 0.45): 5070.656,
    ('bc', 0.7, 0.45): 7984.902,
    ('bc', 0.65, 0.45): 13339.76,
    ('bc', 0.6, 0.45): 25016.93,
    ('bc', 1.0, 0.4): 414.546,
    ('bc', 0.95, 0.4): 996.672,
    ('bc', 0.9, 0.4): 1683.427,
    ('bc', 0.85, 0.4): 2815.62,
    ('bc', 0.8, 0.4): 4455.89,
    ('bc', 0.75, 0.4): 7358.926,
    ('bc', 0.7, 0.4): 13297.78,
    ('bc', 0.65, 0.4): 25743.05,
    ('bc', 0.6, 0.4): 63722.74,
    ('bc', 1.0, 0.35): 473.636,
    ('bc', 0.95, 0.35): 1234.009,
    ('bc', 0.9, 0.35): 2218.427,
    ('bc', 0.85, 0.35): 3832.711,
    ('bc', 0.8, 0.35): 6882.528,
    ('bc', 0.75, 0.35): 12585.91,
    ('bc', 0.7, 0.35): 26499.93,
    ('bc', 0.65, 0.35): 74077.08,
    ('ft', 1.0, 1.0): 234.099,
    ('ft', 0.95, 1.0): 361.049,
    ('ft', 0.9, 1.0): 462.091,
    ('ft', 0.85, 1.0): 590.253,
    ('ft', 0.8, 1.0): 716.03,
    ('ft', 0.75, 1.0): 851.755,
    ('ft', 0.7, 1.0): 996.776,
    ('ft', 0.65, 1.0): 1206.307,
    ('ft', 0.6, 1.0): 1431.352,
    ('ft', 1.0, 0.95): 245.924,
    ('ft', 0.95, 0.95): 384.369,
    ('ft', 0.9, 0.95): 512.155,
    ('ft', 0.85, 0.95): 631.904,
    ('ft', 0.8, 0.95): 779.754,
    ('ft', 0.75, 0.95): 929.23,
    ('ft', 0.7, 0.95): 1132.713,
    ('ft', 0.65, 0.95): 1325.878,
    ('ft', 0.6, 0.95): 1574.523,
    ('ft', 1.0, 0.9): 259.346,
    ('ft', 0.95, 0.9): 418.701,
    ('ft', 0.9, 0.9): 555.846,
    ('ft', 0.85, 0.9): 696.247,
    ('ft', 0.8, 0.9): 846.392,
    ('ft', 0.75, 0.9): 1039.581,
    ('ft', 0.7, 0.9): 1275.197,
    ('ft', 0.65, 0.9): 1514.627,
    ('ft', 0.6, 0.9): 1826.617,
    ('ft', 1.0, 0.85): 275.493,
    ('ft', 0.95, 0.85): 450.995,
    ('ft', 0.9, 0.85): 591.611,
    ('ft', 0.85, 0.85): 751.928,
    ('ft', 0.8, 0.85): 945.971,
    ('ft', 0.75, 0.85): 1155.384,
    ('ft', 0.7, 0.85): 1412.938,
    ('ft', 0.65, 0.85): 1694.107,
    ('ft', 0.6, 0.85): 2061.644,
    ('ft', 1.0, 0.8): 289.746,
    ('ft', 0.95, 0.8): 474.639,
    ('ft', 0.9, 0.8): 657.124,
    ('ft', 0.85, 0.8): 846.583,
    ('ft', 0.8, 0.8): 1073.885,
    ('ft', 0.75, 0.8): 1341.471,
    ('ft', 0.7, 0.8): 1625.042,
    ('ft', 0.65, 0.8): 2034.259,
    ('ft', 0.6, 0.8): 2407.814,
    ('ft', 1.0, 0.75): 309.022,
    ('ft', 0.95, 0.75): 518.628,
    ('ft', 0.9, 0.75): 719.507,
    ('ft', 0.85, 0.75): 942.644,
    ('ft', 0.8, 0.75): 1184.645,
    ('ft', 0.75, 0.75): 1527.11,
    ('ft', 0.7, 0.75): 1873.568,
    ('ft', 0.65, 0.75): 2395.379,
    ('ft', 0.6, 0.75): 2942.497,
    ('ft', 1.0, 0.7): 337.233,
    ('ft', 0.95, 0.7): 570.886,
    ('ft', 0.9, 0.7): 807.81,
    ('ft', 0.85, 0.7): 1076.267,
    ('ft', 0.8, 0.7): 1376.793,
    ('ft', 0.75, 0.7): 1780.75,
    ('ft', 0.7, 0.7): 2223.255,
    ('ft', 0.65, 0.7): 2780.624,
    ('ft', 0.6, 0.7): 3536.249,
    ('ft', 1.0, 0.65): 360.027,
    ('ft', 0.95, 0.65): 654.276,
    ('ft', 0.9, 0.65): 903.714,
    ('ft', 0.85, 0.65): 1222.03,
    ('ft', 0.8, 0.65): 1561.489,
    ('ft', 0.75, 0.65): 2110.796,
    ('ft', 0.7, 0.65): 2593.069,
    ('ft', 0.65, 0.65): 3363.44,
    ('ft', 0.6, 0.65): 4372.477,
    ('ft', 1.0, 0.6): 390.42,
    ('ft', 0.95, 0.6): 719.669,
    ('ft', 0.9, 0.6): 1027.85,
    ('ft', 0.85, 0.6): 1420.807,
    ('ft', 0.8, 0.6): 1857.157,
    ('ft', 0.75, 0.6): 2491.812,
    ('ft', 0.7, 0.6): 3303.234,
    ('ft', 0.65, 0.6): 4271.355,
    ('ft', 0.6, 0.6): 5663.664,
    ('ft', 1.0, 0.55): 425.797,
    ('ft', 0.95, 0.55): 817.616,
    ('ft', 0.9, 0.55): 1211.947,
    ('ft', 0.85, 0.55): 1673.944,
    ('ft', 0.8, 0.55): 2309.427,
    ('ft', 0.75, 0.55): 3092.693,
    ('ft', 0.7, 0.55): 4160.624,
    ('ft', 0.65, 0.55): 5502.299,
    ('ft', 0.6, 0.55): 7751.852,
    ('ft', 1.0, 0.5): 466.579,
    ('ft', 0.95, 0.5): 928.206,
    ('ft', 0.9, 0.5): 1432.573,
    ('ft', 0.85, 0.5): 2044.601,
    ('ft', 0.8, 0.5): 2804.419,
    ('ft', 0.75, 0.5): 3836.378,
    ('ft', 0.7, 0.5): 5499.969,
    ('ft', 0.65, 0.5): 7662.418,
    ('ft', 0.6, 0.5): 11093.98,
    ('ft', 1.0, 0.45): 519.76,
    ('ft', 0.95, 0.45): 1112.707,
    ('ft', 0.9, 0.45): 1724.578,
    ('ft', 0.85, 0.45): 2495.029,
    ('ft', 0.8, 0.45): 3612.86,
    ('ft', 0.75, 0.45): 5179.98,
    ('ft', 0.7, 0.45): 7484.748,
    ('ft', 0.65, 0.45): 11356.39,
    ('ft', 0.6, 0.45): 17528.47,
    ('ft', 1.0, 0.4): 581.398,
    ('ft', 0.95, 0.4): 1302.668,
    ('ft', 0.9, 0.4): 2123.358,
    ('ft', 0.85, 0.4): 3243.961,
    ('ft', 0.8, 0.4): 4803.101,
    ('ft', 0.75, 0.4): 7302.969,
    ('ft', 0.7, 0.4): 11542.69,
    ('ft', 0.65, 0.4): 18748.54,
    ('ft', 0.6, 0.4): 33004.62,
    ('ft', 1.0, 0.35): 665.757,
    ('ft', 0.95, 0.35): 1592.206,
    ('ft', 0.9, 0.35): 2786.819,
    ('ft', 0.85, 0.35): 4429.673,
    ('ft', 0.8, 0.35): 7045.669,
    ('ft', 0.75, 0.35): 11521.79,
    ('ft', 0.7, 0.35): 19765.98,
    ('ft', 0.65, 0.35): 38068.37,
    ('ft', 0.6, 0.35): 83833.69,
    ('hb', 1.0, 1.0): 538.108,
    ('hb', 0.95, 1.0): 643.254,
    ('hb', 0.9, 1.0): 759.623,
    ('hb', 0.85, 1.0): 912.669,
    ('hb', 0.8, 1.0): 1056.444,
    ('hb', 0.75, 1.0): 1233.634,
    ('hb', 0.7, 1.0): 1448.241,
    ('hb', 0.65, 1.0): 1702.21,
    ('hb', 0.6, 1.0): 2011.441,
    ('hb', 1.0, 0.95): 574.626,
    ('hb', 0.95, 0.95): 684.327,
    ('hb', 0.9, 0.95): 809.546,
    ('hb', 0.85, 0.95): 972.457,
    ('hb', 0.8, 0.95): 1144.787,
    ('hb', 0.75, 0.95): 1350.292,
    ('hb', 0.7, 0.95): 1616.565,
    ('hb', 0.65, 0.95): 1896.063,
    ('hb', 0.6, 0.95): 2251.269,
    ('hb', 1.0, 0.9): 601.86,
    ('hb', 0.95, 0.9): 734.153,
    ('hb', 0.9, 0.9): 871.632,
    ('hb', 0.85, 0.9): 1041.118,
    ('hb', 0.8, 0.9): 1280.526,
    ('hb', 0.75, 0.9): 1502.996,
    ('hb', 0.7, 0.9): 1810.434,
    ('hb', 0.65, 0.9): 2120.654,
    ('hb', 0.6, 0.9): 2562.25,
    ('hb', 1.0, 0.85): 636.235,
    ('hb', 0.95, 0.85): 780.374,
    ('hb', 0.9, 0.85): 957.234,
    ('hb', 0.85, 0.85): 1137.184,
    ('hb', 0.8, 0.85): 1364.196,
    ('hb', 0.75, 0.85): 1663.844,
    ('hb', 0.7, 0.85): 2056.685,
    ('hb', 0.65, 0.85): 2485.285,
    ('hb', 0.6, 0.85): 3047.063,
    ('hb', 1.0, 0.8): 674.237,
    ('hb', 0.95, 0.8): 833.574,
    ('hb', 0.9, 0.8): 1031.503,
    ('hb', 0.85, 0.8): 1271.62,
    ('hb', 0.8, 0.8): 1537.344,
    ('hb', 0.75, 0.8): 1922.406,
    ('hb', 0.7, 0.8): 2356.007,
    ('hb', 0.65, 0.8): 2886.691,
    ('hb', 0.6, 0.8): 3512.182,
    ('hb', 1.0, 0.75): 712.093,
    ('hb', 0.95, 0.75): 908.231,
    ('hb', 0.9, 0.75): 1129.152,
    ('hb', 0.85, 0.75): 1388.736,
    ('hb', 0.8, 0.75): 1757.375,
    ('hb', 0.75, 0.75): 2152.616,
    ('hb', 0.7, 0.75): 2687.703,
    ('hb', 0.65, 0.75): 3351.902,
    ('hb', 0.6, 0.75): 4257.354,
    ('hb', 1.0, 0.7): 784.42,
    ('hb', 0.95, 0.7): 1000.224,
    ('hb', 0.9, 0.7): 1230.416,
    ('hb', 0.85, 0.7): 1580.273,
    ('hb', 0.8, 0.7): 1964.927,
    ('hb', 0.75, 0.7): 2466.244,
    ('hb', 0.7, 0.7): 3146.388,
    ('hb', 0.65, 0.7): 4113.707,
    ('hb', 0.6, 0.7): 5272.378,
    ('hb', 1.0, 0.65): 852.85,
    ('hb', 0.95, 0.65): 1066.54,
    ('hb', 0.9, 0.65): 1383.679,
    ('hb', 0.85, 0.65): 1789.643,
    ('hb', 0.8, 0.65): 2253.984,
    ('hb', 0.75, 0.65): 2906.097,
    ('hb', 0.7, 0.65): 3840.653,
    ('hb', 0.65, 0.65): 4946.336,
    ('hb', 0.6, 0.65): 6689.905,
    ('hb', 1.0, 0.6): 908.848,
    ('hb', 0.95, 0.6): 1181.096,
    ('hb', 0.9, 0.6): 1574.578,
    ('hb', 0.85, 0.6): 2081.068,
    ('hb', 0.8, 0.6): 2654.442,
    ('hb', 0.75, 0.6): 3515.377,
    ('hb', 0.7, 0.6): 4805.121,
    ('hb', 0.65, 0.6): 6448.616,
    ('hb', 0.6, 0.6): 8940.049,
    ('hb', 1.0, 0.55): 983.286,
    ('hb', 0.95, 0.55): 1333.104,
    ('hb', 0.9, 0.55): 1812.558,
    ('hb', 0.85, 0.55): 2402.852,
    ('hb', 0.8, 0.55): 3259.621,
    ('hb', 0.75, 0.55): 4408.826,
    ('hb', 0.7, 0.55): 5955.009,
    ('hb', 0.65, 0.55): 8593.798,
    ('hb', 0.6, 0.55): 12597.03,
    ('hb', 1.0, 0.5): 1087.78,
    ('hb', 0.95, 0.5): 1495.17,
    ('hb', 0.9, 0.5): 2119.745,
    ('hb', 0.85, 0.5): 2964.009,
    ('hb', 0.8, 0.5): 4068.224,
    ('hb', 0.75, 0.5): 5571.716,
    ('hb', 0.7, 0.5): 8035.144,
    ('hb', 0.65, 0.5): 12339.58,
    ('hb', 0.6, 0.5): 19706.51,
    ('hb', 1.0, 0.45): 1225.173,
    ('hb', 0.95, 0.45): 1763.995,
    ('hb', 0.9, 0.45): 2510.148,
    ('hb', 0.85, 0.45): 3626.29,
    ('hb', 0.8, 0.45): 5112.787,
    ('hb', 0.75, 0.45): 7750.267,
    ('hb', 0.7, 0.45): 11859.26,
    ('hb', 0.65, 0.45): 19966.72,
    ('hb', 0.6, 0.45): 35981.45,
    ('hb', 1.0, 0.4): 1356.933,
    ('hb', 0.95, 0.4): 2056.374,
    ('hb', 0.9, 0.4): 3105.767,
    ('hb', 0.85, 0.4): 4595.77,
    ('hb', 0.8, 0.4): 7067.243,
    ('hb', 0.75, 0.4): 11288.44,
    ('hb', 0.7, 0.4): 19362.25,
    ('hb', 0.65, 0.4): 37558.86,
    ('hb', 0.6, 0.4): 91942.35,
    ('hb', 1.0, 0.35): 1554.77,
    ('hb', 0.95, 0.35): 2544.067,
    ('hb', 0.9, 0.35): 3914.772,
    ('hb', 0.85, 0.35): 6296.296,
    ('hb', 0.8, 0.35): 10456.32,
    ('hb', 0.75, 0.35): 18819.72,
    ('hb', 0.7, 0.35): 38944.8,
    ('hb', 0.65, 0.35): 102742.2,
}

# mean rounds for a 4-digit PIN with a symmetric oracle of the given accuracy
MOD10_ROUNDS: dict[float, float] = {1.0: 24.4, 0.9: 36.1, 0.8: 60.20, 0.7: 118.37, 0.6: 409.76}

# attack rounds at the operating points of the trained keystroke classifiers
CLASSIFIER_POINTS: dict[str, tuple[float, float, float]] = {
    "bc": (1.0, 0.38, 435.0),
    "ft": (1.0, 0.40, 589.0),
    "hb": (1.0, 0.40, 1346.0),
}
