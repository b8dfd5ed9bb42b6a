// regenerated below by the editor
