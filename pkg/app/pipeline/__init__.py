"""Pipeline LangGraph del experimento de clasificación grafo vs hipergrafo."""
