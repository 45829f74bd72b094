// Captured verbatim from the running service so UI tests compare against
// real wire payloads, never against numbers computed in the browser.

export const PARAMS_FIXTURE = {
  "params": {
    "num_segments": 3,
    "discs_per_segment": 5,
    "gaps_per_segment": 4,
    "disc_diameter": 15.0,
    "disc_height": 4.0,
    "gap_length_L": 10.0,
    "tendon_pitch_D": 6.0,
    "ligament_angle_alpha": 40.0,
    "theta2_max": 1.5707963267948966,
    "channel_layout": {
      "0": "+X",
      "1": "+Y",
      "2": "-X",
      "3": "-Y"
    }
  },
  "derived": {
    "theta2_max_deg": 90.0,
    "total_length_mm": 180.0,
    "segment_length_mm": 60.0,
    "pulley_radii_mm": [
      2.9807605534326176,
      5.961521106865235,
      8.942281660297851
    ],
    "psi_max_deg": 180.0
  }
};

export const ZERO_STATE = {
  "command": {
    "segments": [
      {
        "theta1_deg": 0.0,
        "theta2_deg": 0.0
      },
      {
        "theta1_deg": 0.0,
        "theta2_deg": 0.0
      },
      {
        "theta1_deg": 0.0,
        "theta2_deg": 0.0
      }
    ]
  },
  "tip": {
    "position_mm": [
      0.0,
      0.0,
      180.0
    ],
    "quaternion_wxyz": [
      1.0,
      0.0,
      0.0,
      0.0
    ]
  },
  "polyline_mm": [
    [
      0.0,
      0.0,
      2.0
    ],
    [
      0.0,
      0.0,
      16.0
    ],
    [
      0.0,
      0.0,
      30.0
    ],
    [
      0.0,
      0.0,
      44.0
    ],
    [
      0.0,
      0.0,
      58.0
    ],
    [
      0.0,
      0.0,
      62.0
    ],
    [
      0.0,
      0.0,
      76.0
    ],
    [
      0.0,
      0.0,
      90.0
    ],
    [
      0.0,
      0.0,
      104.0
    ],
    [
      0.0,
      0.0,
      118.0
    ],
    [
      0.0,
      0.0,
      122.0
    ],
    [
      0.0,
      0.0,
      136.0
    ],
    [
      0.0,
      0.0,
      150.0
    ],
    [
      0.0,
      0.0,
      164.0
    ],
    [
      0.0,
      0.0,
      178.0
    ]
  ],
  "tendon_pulls_mm": [
    [
      0.0,
      0.0,
      0.0,
      0.0
    ],
    [
      0.0,
      0.0,
      0.0,
      0.0
    ],
    [
      0.0,
      0.0,
      0.0,
      0.0
    ]
  ],
  "motor_rotations_deg": [
    [
      0.0,
      0.0,
      0.0,
      0.0
    ],
    [
      0.0,
      0.0,
      0.0,
      0.0
    ],
    [
      0.0,
      0.0,
      0.0,
      0.0
    ]
  ],
  "saturation_warnings": []
};

export const BEND90_STATE = {
  "command": {
    "segments": [
      {
        "theta1_deg": 0.0,
        "theta2_deg": 90.0
      },
      {
        "theta1_deg": 0.0,
        "theta2_deg": 0.0
      },
      {
        "theta1_deg": 0.0,
        "theta2_deg": 0.0
      }
    ]
  },
  "tip": {
    "position_mm": [
      157.51946987895494,
      0.0,
      37.519469878954965
    ],
    "quaternion_wxyz": [
      0.7071067811865476,
      0.0,
      0.7071067811865476,
      0.0
    ]
  },
  "polyline_mm": [
    [
      0.0,
      0.0,
      2.0
    ],
    [
      2.7037586521373203,
      0.0,
      15.592712649066902
    ],
    [
      10.40341186339459,
      0.0,
      27.116058015560366
    ],
    [
      21.926757229888054,
      0.0,
      34.81571122681764
    ],
    [
      35.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      39.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      53.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      67.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      81.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      95.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      99.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      113.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      127.51946987895495,
      0.0,
      37.519469878954965
    ],
    [
      141.51946987895494,
      0.0,
      37.519469878954965
    ],
    [
      155.51946987895494,
      0.0,
      37.519469878954965
    ]
  ],
  "tendon_pulls_mm": [
    [
      9.364335456774157,
      4.682167728387078,
      0.0,
      4.682167728387078
    ],
    [
      0.0,
      0.0,
      0.0,
      0.0
    ],
    [
      0.0,
      0.0,
      0.0,
      0.0
    ]
  ],
  "motor_rotations_deg": [
    [
      180.0,
      90.0,
      0.0,
      90.0
    ],
    [
      90.0,
      45.0,
      0.0,
      45.0
    ],
    [
      60.00000000000001,
      30.000000000000004,
      0.0,
      30.000000000000004
    ]
  ],
  "saturation_warnings": [
    {
      "segment": 1,
      "channel": 0,
      "rotation_deg": 180.0,
      "message": "motor (segment 1, channel 0) at servo limit"
    }
  ]
};

export const STATUS_422 = {
  "status": 422,
  "body": {
    "detail": "theta2 exceeds theta2_max: 3.490659 > 1.570796"
  }
};

export const WORKSPACE_2X2 = {
  "grid": "2x2",
  "total": 64,
  "count": 50,
  "points_mm": [
    [
      129.84996716126912,
      0.0,
      53.78561747189869
    ],
    [
      113.58381956832537,
      0.0,
      38.544879810415466
    ],
    [
      129.84996716126912,
      2.7283578099187777e-15,
      98.34308190684214
    ],
    [
      113.58381956832537,
      4.594809869296771e-15,
      113.58381956832537
    ],
    [
      97.61800759081038,
      0.0,
      1.1546319456101628e-14
    ],
    [
      75.33927537333865,
      0.0,
      0.725074316031771
    ],
    [
      129.12489284523733,
      2.7283578099187777e-15,
      31.506885254426955
    ],
    [
      128.39981852920556,
      4.594809869296771e-15,
      53.78561747189869
    ],
    [
      66.83619665241521,
      8.185073429756332e-15,
      161.35685241569607
    ],
    [
      82.07693431389842,
      7.323167679215547e-15,
      145.09070482275231
    ],
    [
      22.27873221747176,
      9.315196237631245e-15,
      161.35685241569604
    ],
    [
      7.037994555988541,
      9.226400243604022e-15,
      145.09070482275231
    ],
    [
      1.1331766104477945e-14,
      1.3910006106928014e-14,
      160.63177809966422
    ],
    [
      22.278732217471745,
      1.3784429607890314e-14,
      159.90670378363254
    ],
    [
      -31.506885254426933,
      1.1181648297009234e-14,
      129.1248928452373
    ],
    [
      -30.78181093839517,
      9.189619738593539e-15,
      106.84616062776557
    ],
    [
      144.36563050672058,
      4.594809869296771e-15,
      15.240737661483223
    ],
    [
      145.09070482275231,
      8.185073429756332e-15,
      82.0769343138984
    ],
    [
      144.36563050672058,
      7.323167679215547e-15,
      59.79820209642668
    ],
    [
      113.58381956832535,
      9.315196237631245e-15,
      113.58381956832535
    ],
    [
      91.30508735085363,
      9.226400243604022e-15,
      112.85874525229357
    ],
    [
      97.31767197538163,
      1.3910006106928014e-14,
      128.82455722980862
    ],
    [
      112.55840963686485,
      1.3784429607890314e-14,
      112.55840963686487
    ],
    [
      52.760207540438174,
      1.1181648297009234e-14,
      128.82455722980862
    ],
    [
      37.51946987895495,
      9.189619738593539e-15,
      112.55840963686487
    ],
    [
      -22.27873221747176,
      1.2043554047550018e-14,
      161.35685241569604
    ],
    [
      -7.037994555988541,
      1.00883059941448e-14,
      145.09070482275231
    ],
    [
      -66.83619665241521,
      1.637014685951266e-14,
      161.35685241569607
    ],
    [
      -82.07693431389842,
      1.7374693168349878e-14,
      145.09070482275231
    ],
    [
      31.506885254426933,
      7.323167679215547e-15,
      129.1248928452373
    ],
    [
      30.78181093839517,
      5.419935114827074e-15,
      106.84616062776557
    ],
    [
      -1.1331766104477945e-14,
      1.3910006106928018e-14,
      160.63177809966422
    ],
    [
      -22.278732217471745,
      1.6512787417809094e-14,
      159.90670378363254
    ],
    [
      -129.84996716126912,
      1.863039247526249e-14,
      98.34308190684214
    ],
    [
      -113.58381956832537,
      1.8504815976224784e-14,
      113.58381956832537
    ],
    [
      -129.84996716126912,
      1.5902034665343715e-14,
      53.78561747189869
    ],
    [
      -113.58381956832537,
      1.3910006106928016e-14,
      38.544879810415466
    ],
    [
      -129.12489284523733,
      1.854159648123527e-14,
      31.506885254426955
    ],
    [
      -128.39981852920556,
      2.031925254658604e-14,
      53.78561747189869
    ],
    [
      -97.61800759081038,
      1.1954758053522798e-14,
      1.1546319456101628e-14
    ],
    [
      -75.33927537333865,
      9.226400243604022e-15,
      0.725074316031771
    ],
    [
      -113.58381956832535,
      2.3225202344559258e-14,
      113.58381956832535
    ],
    [
      -91.30508735085363,
      2.0408048540613247e-14,
      112.85874525229357
    ],
    [
      -145.09070482275231,
      2.5953560154478045e-14,
      82.0769343138984
    ],
    [
      -144.36563050672058,
      2.5002858409910028e-14,
      59.79820209642668
    ],
    [
      -52.760207540438174,
      1.7642910225684002e-14,
      128.82455722980862
    ],
    [
      -37.51946987895495,
      1.3784429607890316e-14,
      112.55840963686487
    ],
    [
      -97.31767197538163,
      2.5827983655440332e-14,
      128.82455722980862
    ],
    [
      -112.55840963686485,
      2.7568859215780626e-14,
      112.55840963686487
    ],
    [
      -144.36563050672058,
      2.227450059999125e-14,
      15.240737661483223
    ]
  ]
};
