# examples/track_synthetic_example.py

from PyDRTracker import (
    TrackerConfig, DRTracker, run_ope, AblationStudy,
    ChartGenerator, configure_logging,
)
from PyDRTracker.data.synthetic import distractor_sequence, translating_sequence, zooming_sequence

import os

configure_logging("INFO")

# Step 1: Build a small synthetic benchmark
sequences = [
    translating_sequence(num_frames=30),
    zooming_sequence(num_frames=30),
    distractor_sequence(num_frames=30),
]

# Step 2: Track one sequence frame by frame
config = TrackerConfig(use_cn=False)
tracker = DRTracker(config)
sequence = sequences[2]
state = tracker.init(sequence.frame(0), sequence.groundtruth[0])
for index in range(1, len(sequence)):
    box = tracker.track(state, sequence.frame(index))
print(f"Final box: {box.to_line()}  (groundtruth {sequence.groundtruth[-1].to_line()})")

# Step 3: One-pass evaluation over all sequences
report = run_ope(config, sequences, workers=2)
print(report.generate())

os.makedirs("results", exist_ok=True)
report.write("results/ope")

# Step 4: Ablation of the two components
ablation = AblationStudy(config, sequences, workers=2).run()
print(ablation.to_string(index=False))

# Step 5: Charts
baseline = run_ope(TrackerConfig.baseline().with_overrides(use_cn=False), sequences, workers=2)
charts = ChartGenerator({"DRTracker": report, "baseline": baseline})
charts.plot_precision(save_path="results/precision.png")
charts.plot_success(save_path="results/success.png")
