# Analysis Package 
