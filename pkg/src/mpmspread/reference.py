"""Reference angle spreads used as calibration targets, in degrees, at
alpha_t = 180 and alpha_r = 0."""

# reception point: scenario -> (TDL-A NBA, TDL-A WBA, TDL-B NBA, TDL-B WBA)
RECEPTION = {
    "Sc1": (50.4, 52.0, 16.9, 28.2), "Sc2": (52.0, 54.4, 17.3, 29.4), "Sc3": (62.1, 72.8, 20.0, 38.6),
    "Sc4": (58.5, 65.6, 19.0, 35.0), "Sc5": (66.1, 82.4, 21.1, 43.2), "Sc6": (74.9, 117.6, 24.2, 60.5),
    "Sc7": (68.2, 88.4, 21.8, 46.1), "Sc8": (74.4, 114.4, 24.0, 58.9), "Sc9": (76.6, 130.8, 24.9, 68.1),
    "Sc10": (74.3, 113.7, 23.9, 58.5), "Sc11": (76.3, 128.3, 24.8, 66.5),
}
RECEPTION_COLUMNS = (("TDL-A", "nba"), ("TDL-A", "wba"), ("TDL-B", "nba"), ("TDL-B", "wba"))

# Rx antenna output with the same beam at both ends
RX_OUTPUT_NBA = 3.5
# scenario -> (TDL-A, TDL-B), wide beam
RX_OUTPUT_WBA = {
    "Sc1": (15.4, 9.1), "Sc2": (15.9, 9.2), "Sc3": (19.5, 9.6), "Sc4": (18.3, 9.5), "Sc5": (20.5, 9.6),
    "Sc6": (11.1, 8.1), "Sc7": (20.4, 9.5), "Sc8": (12.4, 8.3), "Sc9": (7.6, 7.3), "Sc10": (12.7, 8.4),
    "Sc11": (7.9, 7.5),
}


def reception_target(scenario_id: str, profile: str, antenna: str) -> float:
    return RECEPTION[scenario_id][RECEPTION_COLUMNS.index((profile, antenna))]


def rx_output_target(scenario_id: str, profile: str, antenna: str) -> float:
    if antenna == "nba":
        return RX_OUTPUT_NBA
    return RX_OUTPUT_WBA[scenario_id][0 if profile == "TDL-A" else 1]
