# Utils Package 
