from app.pipeline.state.pipeline_state import ExperimentState

__all__ = ["ExperimentState"]
