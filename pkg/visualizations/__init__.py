# Visualizations Package 
